#include <doctest.h>

#include "lrkit/shapes.hpp"

using namespace lrkit;

namespace {

std::vector<std::vector<int>> all_words(int n, int d) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != d) continue;
        std::vector<int> bits(n);
        for (int i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
        out.push_back(bits);
    }
    return out;
}

}  // namespace

TEST_CASE("partition to 01-word on the 4x6 example") {
    AmbientRectangle box{4, 6};
    Partition lam({4, 2, 1, 0}, box);
    CHECK(word_to_string(partition_to_word(lam)) == "0010010101");
    Partition empty({}, box);
    CHECK(word_to_string(partition_to_word(empty)) == "0000001111");
    Partition full({6, 6, 6, 6}, box);
    CHECK(word_to_string(partition_to_word(full)) == "1111000000");
}

TEST_CASE("complement and transpose of 4210") {
    AmbientRectangle box{4, 6};
    Partition lam({4, 2, 1, 0}, box);
    CHECK(complement(lam).trimmed() == std::vector<int>{6, 5, 4, 2});
    Partition lt = transpose(lam);
    CHECK(lt.box.d == 6);
    CHECK(lt.box.width == 4);
    CHECK(lt.trimmed() == std::vector<int>{3, 2, 1, 1});
    CHECK(complement(Partition({}, box)).trimmed() == std::vector<int>{6, 6, 6, 6});
}

TEST_CASE("word round trips and word identities, n <= 10") {
    for (int n = 2; n <= 10; ++n)
        for (int d = 1; d < n; ++d)
            for (const auto& bits : all_words(n, d)) {
                BinaryWord w{bits};
                Partition p = word_to_partition(w);
                CHECK(partition_to_word(p).bits == bits);
                // complement = reverse
                std::vector<int> rev(bits.rbegin(), bits.rend());
                CHECK(partition_to_word(complement(p)).bits == rev);
                // transpose = reverse then swap
                std::vector<int> ts = rev;
                for (int& b : ts) b = 1 - b;
                CHECK(partition_to_word(transpose(p)).bits == ts);
                CHECK(p.size() + complement(p).size() == static_cast<long long>(d) * (n - d));
            }
}

TEST_CASE("rotate of a skew shape is mu^v / lam^v") {
    AmbientRectangle box{4, 6};
    Partition lam({4, 2, 1, 0}, box), mu({2, 1, 0, 0}, box);
    SkewShape s(lam, mu);
    SkewShape r = rotate_shape(s);
    CHECK(r.outer.trimmed() == std::vector<int>{6, 6, 5, 4});
    CHECK(r.inner.trimmed() == std::vector<int>{6, 5, 4, 2});
    // cell image under (i,j) -> (d-i+1, n-d-j+1): row 2 holds exactly col 6
    CHECK(r.row_begin(2) == 6);
    CHECK(r.row_end(2) == 6);
    CHECK(rotate_shape(r) == s);
}

TEST_CASE("rotate transpose on straight shapes = swap on words") {
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d < n; ++d)
            for (const auto& bits : all_words(n, d)) {
                BinaryWord w{bits};
                Partition p = word_to_partition(w);
                SkewShape s(p, Partition({}, p.box));
                // the image is the antinormal shape D^t / lam^{v t}, and the
                // complement-transpose is exactly the 01-swap on words
                SkewShape rt = rotate_transpose_shape(s);
                std::vector<int> sw = bits;
                for (int& b : sw) b = 1 - b;
                CHECK(rt.outer.size() == static_cast<long long>(d) * (n - d));
                CHECK(partition_to_word(rt.inner).bits == sw);
                CHECK(partition_to_word(transpose(complement(p))).bits == sw);
            }
}

TEST_CASE("partition text forms") {
    AmbientRectangle box{4, 6};
    CHECK(parse_partition("4210", box).trimmed() == std::vector<int>{4, 2, 1});
    CHECK(parse_partition("(4,2,1,0)", box).trimmed() == std::vector<int>{4, 2, 1});
    CHECK(parse_partition("w:0010010101", box).trimmed() == std::vector<int>{4, 2, 1});
    AmbientRectangle wide{2, 13};
    CHECK(parse_partition("(11,8)", wide).trimmed() == std::vector<int>{11, 8});
    CHECK(partition_to_string(parse_partition("(11,8)", wide)) == "(11,8)");
    CHECK(partition_to_string(parse_partition("421", box)) == "421");
    CHECK_THROWS(parse_partition("4x1", box));
    CHECK_THROWS(parse_partition("124", box));
}
