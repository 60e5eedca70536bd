#include "lrkit/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lrkit {

Partition::Partition(std::vector<int> p, AmbientRectangle b) : parts(std::move(p)), box(b) {
    if (box.d <= 0 || box.width < 0) throw std::invalid_argument("bad ambient rectangle");
    while (static_cast<int>(parts.size()) > box.d && parts.back() == 0) parts.pop_back();
    if (static_cast<int>(parts.size()) > box.d) throw std::invalid_argument("partition has too many parts");
    parts.resize(box.d, 0);
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw std::invalid_argument("parts not weakly decreasing");
    if (!parts.empty() && parts[0] > box.width) throw std::invalid_argument("partition exceeds rectangle width");
    if (!parts.empty() && parts.back() < 0) throw std::invalid_argument("negative part");
}

long long Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }

int Partition::length() const {
    int len = 0;
    for (int i = 0; i < box.d; ++i)
        if (parts[i] > 0) len = i + 1;
    return len;
}

std::vector<int> Partition::trimmed() const {
    std::vector<int> t(parts.begin(), parts.begin() + length());
    return t;
}

bool Partition::contains(const Partition& inner) const {
    if (!(box == inner.box)) return false;
    for (int i = 0; i < box.d; ++i)
        if (inner.parts[i] > parts[i]) return false;
    return true;
}

BinaryWord::BinaryWord(std::vector<int> b) : bits(std::move(b)) {
    for (int x : bits) {
        if (x != 0 && x != 1) throw std::invalid_argument("binary word entries must be 0/1");
        ones += x;
    }
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner)) throw std::invalid_argument("inner shape not contained in outer shape");
}

bool SkewShape::contains(int r, int c) const {
    return r >= 1 && r <= box().d && c >= row_begin(r) && c <= row_end(r);
}

BinaryWord partition_to_word(const Partition& p) {
    const int d = p.box.d, w = p.box.width;
    std::vector<int> bits(d + w, 0);
    // the vertical step of row i sits at position (width - p_i) + i
    for (int i = 1; i <= d; ++i) bits[w - p.part(i) + i - 1] = 1;
    return BinaryWord(bits);
}

Partition word_to_partition(const BinaryWord& w) {
    const int n = w.n(), d = w.ones;
    if (d == 0 || d == n) {
        // degenerate rectangles are not used; treat all-zero/all-one as invalid
        throw std::invalid_argument("word must contain both zeroes and ones");
    }
    AmbientRectangle box{d, n - d};
    std::vector<int> parts;
    int i = 0;
    for (int pos = 1; pos <= n; ++pos) {
        if (w.bits[pos - 1] == 1) {
            ++i;
            parts.push_back(box.width - pos + i);
        }
    }
    return Partition(parts, box);
}

Partition complement(const Partition& p) {
    std::vector<int> q(p.box.d);
    for (int i = 0; i < p.box.d; ++i) q[i] = p.box.width - p.parts[p.box.d - 1 - i];
    return Partition(q, p.box);
}

Partition transpose(const Partition& p) {
    AmbientRectangle tbox = p.box.transposed();
    std::vector<int> q(tbox.d, 0);
    for (int j = 1; j <= tbox.d; ++j) {
        int cnt = 0;
        for (int x : p.parts)
            if (x >= j) ++cnt;
        q[j - 1] = cnt;
    }
    return Partition(q, tbox);
}

Partition pad_to(const std::vector<int>& parts, const AmbientRectangle& box) {
    return Partition(parts, box);
}

SkewShape rotate_shape(const SkewShape& s) {
    return SkewShape(complement(s.inner), complement(s.outer));
}

SkewShape transpose_shape(const SkewShape& s) {
    return SkewShape(transpose(s.outer), transpose(s.inner));
}

SkewShape rotate_transpose_shape(const SkewShape& s) {
    return transpose_shape(rotate_shape(s));
}

Partition parse_partition(const std::string& text, const AmbientRectangle& box) {
    if (text.empty()) throw std::invalid_argument("empty partition text");
    if (text.rfind("w:", 0) == 0) {
        std::vector<int> bits;
        for (size_t i = 2; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') throw std::invalid_argument("bad 01-word");
            bits.push_back(text[i] - '0');
        }
        BinaryWord w{bits};
        if (w.n() != box.n() || (w.ones != box.d && w.ones != box.width))
            throw std::invalid_argument("01-word does not match the ambient rectangle");
        Partition p = word_to_partition(w);
        if (!(p.box == box)) throw std::invalid_argument("01-word lives in the transposed rectangle");
        return p;
    }
    std::vector<int> parts;
    if (text.front() == '(') {
        if (text.back() != ')') throw std::invalid_argument("unbalanced parenthesis in partition");
        std::stringstream ss(text.substr(1, text.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            parts.push_back(std::stoi(item));
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in partition");
            parts.push_back(ch - '0');
        }
    }
    return Partition(parts, box);
}

std::string partition_to_string(const Partition& p) {
    std::vector<int> t = p.trimmed();
    if (t.empty()) return "0";
    bool digits = std::all_of(t.begin(), t.end(), [](int x) { return x < 10; });
    std::string out;
    if (digits) {
        for (int x : t) out.push_back(static_cast<char>('0' + x));
        return out;
    }
    out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
    }
    out += ")";
    return out;
}

std::string word_to_string(const BinaryWord& w) {
    std::string s;
    for (int b : w.bits) s.push_back(static_cast<char>('0' + b));
    return s;
}

}  // namespace lrkit
