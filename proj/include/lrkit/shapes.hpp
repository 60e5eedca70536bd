#pragma once

#include <string>
#include <vector>

namespace lrkit {

// Fixed ambient rectangle of d rows and n-d columns, French convention:
// row 1 is the bottom row, rows grow upward, columns grow rightward.
struct AmbientRectangle {
    int d = 0;
    int width = 0;

    int n() const { return d + width; }
    AmbientRectangle transposed() const { return {width, d}; }
    bool operator==(const AmbientRectangle&) const = default;
};

// Weakly decreasing nonnegative parts, zero-padded to length d.
struct Partition {
    std::vector<int> parts;
    AmbientRectangle box;

    Partition() = default;
    Partition(std::vector<int> p, AmbientRectangle b);

    int part(int i) const { return (i >= 1 && i <= box.d) ? parts[i - 1] : 0; }
    long long size() const;
    int length() const;
    std::vector<int> trimmed() const;
    bool empty() const { return size() == 0; }
    bool contains(const Partition& inner) const;
    bool operator==(const Partition&) const = default;
};

// 01-word of length n encoding the boundary path of a partition, read from
// the lower-right corner of the rectangle to the upper-left corner.
struct BinaryWord {
    std::vector<int> bits;
    int ones = 0;

    BinaryWord() = default;
    explicit BinaryWord(std::vector<int> b);
    int n() const { return static_cast<int>(bits.size()); }
    bool operator==(const BinaryWord&) const = default;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);

    const AmbientRectangle& box() const { return outer.box; }
    long long size() const { return outer.size() - inner.size(); }
    int row_begin(int r) const { return inner.part(r) + 1; }  // first column
    int row_end(int r) const { return outer.part(r); }        // last column
    bool contains(int r, int c) const;
    bool operator==(const SkewShape&) const = default;
};

BinaryWord partition_to_word(const Partition& p);
Partition word_to_partition(const BinaryWord& w);

Partition complement(const Partition& p);
Partition transpose(const Partition& p);
Partition pad_to(const std::vector<int>& parts, const AmbientRectangle& box);

// Image of the skew shape under (i,j) -> (d-i+1, n-d-j+1), i.e. mu^v / lam^v.
SkewShape rotate_shape(const SkewShape& s);
// Image under (i,j) -> (n-d-j+1, d-i+1); lands in the transposed rectangle.
SkewShape rotate_transpose_shape(const SkewShape& s);
SkewShape transpose_shape(const SkewShape& s);

// Text forms: "4210" (digits, parts < 10), "(11,8,5,1)", or "w:0010010101".
Partition parse_partition(const std::string& text, const AmbientRectangle& box);
std::string partition_to_string(const Partition& p);
std::string word_to_string(const BinaryWord& w);

}  // namespace lrkit
