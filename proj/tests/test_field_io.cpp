#include "oracles.hpp"

#include "tempograph/field_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace tempograph;

namespace {

TransitionField<double> sample_field(std::uint64_t seed, Index n, Index m) {
    std::mt19937_64 rng(seed);
    const auto seq = oracle::random_bins(rng, n, 6);
    return blurred_transition_field(seq, markov_matrix(seq, 6), m, BlurKernel::gaussian());
}

}  // namespace

TEST(FieldIo, TextRoundTripIsBitExact) {
    const auto f = sample_field(1, 37, 4);
    std::stringstream buf;
    write_field_text(buf, f);
    const auto back = read_field_text(buf);
    EXPECT_EQ(back.values, f.values);
    EXPECT_EQ(back.segment_len, 4);
    EXPECT_EQ(back.source_len, 37);
    EXPECT_EQ(back.bins, 6);
}

TEST(FieldIo, BinaryRoundTripIsBitExact) {
    const auto f = sample_field(2, 50, 3);
    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    write_field_binary(buf, f);
    EXPECT_EQ(buf.str().size(), 8u + 4 * 8 + static_cast<std::size_t>(f.values.size()) * 8);
    const auto back = read_field_binary(buf);
    EXPECT_EQ(back.values, f.values);
}

TEST(FieldIo, SaveLoadPicksFormatByExtension) {
    const auto dir = std::filesystem::temp_directory_path() / "tempograph_field_io";
    std::filesystem::create_directories(dir);
    const auto f = sample_field(3, 20, 2);
    save_field(dir / "f.bin", f);
    save_field(dir / "f.txt", f);
    EXPECT_EQ(load_field(dir / "f.bin").values, f.values);
    EXPECT_EQ(load_field(dir / "f.txt").values, f.values);
    std::filesystem::remove_all(dir);
}

TEST(FieldIo, RejectsMalformedInput) {
    std::istringstream wrong("not-a-field\n");
    EXPECT_THROW(read_field_text(wrong), ParseError);
    std::istringstream inconsistent("tempograph-field 1\nn 10 m 2 Q 3 size 4\n");
    EXPECT_THROW(read_field_text(inconsistent), ArgumentError);
    std::istringstream truncated("tempograph-field 1\nn 4 m 2 Q 3 size 2\n0.1 0.2\n");
    EXPECT_THROW(read_field_text(truncated), ParseError);
    std::istringstream bad_magic("TGFIELDX");
    EXPECT_THROW(read_field_binary(bad_magic), ParseError);
}
