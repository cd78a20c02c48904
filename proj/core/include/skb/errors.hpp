#pragma once

#include <stdexcept>
#include <string>

namespace skb {

/// A truncation could not be certified: the retained support does not prove
/// that omitted terms are harmless. Carries a margin suggestion where one can
/// be computed; callers should raise the truncation degree and retry.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what, long suggested_margin = 0)
        : std::runtime_error(what), suggested_margin_(suggested_margin) {}

    long suggested_margin() const { return suggested_margin_; }

private:
    long suggested_margin_;
};

}  // namespace skb
