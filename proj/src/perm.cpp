#include "perm.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"
#include "numbers.hpp"

namespace modchar {

Perm::Perm(int degree) {
    img_.resize(degree);
    for (int i = 0; i < degree; ++i) img_[i] = static_cast<char>(i);
}

Perm Perm::from_images(std::vector<uint8_t> img) {
    const size_t n = img.size();
    std::vector<bool> seen(n, false);
    for (uint8_t v : img) {
        if (v >= n || seen[v]) throw InputError("not a bijection of {1..degree}");
        seen[v] = true;
    }
    Perm p;
    p.img_.assign(img.begin(), img.end());
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != static_cast<char>(i)) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[static_cast<uint8_t>(img_[i])] = static_cast<char>(i);
    return r;
}

Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img_.resize(a.img_.size());
    for (int i = 0; i < a.degree(); ++i) r.img_[i] = b.img_[static_cast<uint8_t>(a.img_[i])];
    return r;
}

Perm Perm::conjugated_by(const Perm& h) const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i)
        r.img_[static_cast<uint8_t>(h.img_[i])] = h.img_[static_cast<uint8_t>(img_[i])];
    return r;
}

Perm Perm::power(int64_t n) const {
    const uint64_t o = order();
    uint64_t e = static_cast<uint64_t>(((n % static_cast<int64_t>(o)) + static_cast<int64_t>(o)) % static_cast<int64_t>(o));
    Perm base = *this, acc(degree());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

uint64_t Perm::order() const {
    uint64_t o = 1;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        o = lcm_u64(o, len);
    }
    return o;
}

std::string Perm::to_cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == static_cast<char>(i)) continue;
        out += '(';
        bool first = true;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            if (!first) out += ',';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
    if (degree < 1 || degree > 64) throw InputError("degree out of range [1,64]");
    std::vector<uint8_t> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw InputError("expected point in cycle notation: " + text);
            int pt = std::stoi(text.substr(start, pos - start));
            if (pt < 1 || pt > degree) throw InputError("point out of range in cycle notation: " + text);
            cyc.push_back(pt - 1);
            skip_ws();
            if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size()) throw InputError("unterminated cycle: " + text);
        ++pos;  // ')'
        skip_ws();
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (img[from] != from) throw InputError("point repeated across cycles: " + text);
            img[from] = static_cast<uint8_t>(to);
        }
        // degenerate single-point cycle keeps the identity mapping; the
        // repeat check above already rejected duplicates
    }
    return from_images(std::move(img));
}

}  // namespace modchar
