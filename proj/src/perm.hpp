#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modchar {

/// Permutation of {0..degree-1}, stored as an image vector. Points are
/// 1-based in all textual I/O ("(1,2)(3,4)") and 0-based internally.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);  // identity
    static Perm from_images(std::vector<uint8_t> img);

    int degree() const { return static_cast<int>(img_.size()); }
    uint8_t operator[](int i) const { return img_[i]; }

    bool is_identity() const;
    Perm inverse() const;

    // apply lhs then rhs: (a*b)(x) = b(a(x))
    friend Perm operator*(const Perm& a, const Perm& b);

    // h^-1 * g * h without forming the inverse
    Perm conjugated_by(const Perm& h) const;

    Perm power(int64_t n) const;
    uint64_t order() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // raw image bytes; doubles as a hash key
    const std::string& key() const { return img_; }

    std::string to_cycles() const;  // "(1,2)(3,4)", "()" for identity
    static Perm parse_cycles(const std::string& text, int degree);

private:
    std::string img_;  // one byte per point
};

struct PermHash {
    size_t operator()(const Perm& p) const { return std::hash<std::string>()(p.key()); }
};

}  // namespace modchar
