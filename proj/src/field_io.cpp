#include "tempograph/field_io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace tempograph {

namespace {

constexpr char kTextMagic[] = "tempograph-field";
constexpr std::array<char, 8> kBinaryMagic{'T', 'G', 'F', 'I', 'E', 'L', 'D', '1'};

static_assert(std::endian::native == std::endian::little, "binary field format assumes little-endian");

void check_header(Index n, Index m, Index q, Index side) {
    if (n < 1 || m < 1 || q < 1 || side != field_side(n, m)) {
        throw ArgumentError("field header is inconsistent: size must equal ceil(n/m)");
    }
}

}  // namespace

void write_field_text(std::ostream& out, const TransitionField<double>& field) {
    out << kTextMagic << " 1\n";
    out << "n " << field.source_len << " m " << field.segment_len << " Q " << field.bins << " size "
        << field.size() << '\n';
    char buf[64];
    for (Index r = 0; r < field.size(); ++r) {
        for (Index c = 0; c < field.size(); ++c) {
            const auto res = std::to_chars(buf, buf + sizeof buf, field.values(r, c));
            if (c > 0) out << ' ';
            out.write(buf, res.ptr - buf);
        }
        out << '\n';
    }
}

TransitionField<double> read_field_text(std::istream& in) {
    std::string magic, key_n, key_m, key_q, key_size;
    int version = 0;
    Index n = 0, m = 0, q = 0, side = 0;
    in >> magic >> version >> key_n >> n >> key_m >> m >> key_q >> q >> key_size >> side;
    if (!in || magic != kTextMagic || version != 1 || key_n != "n" || key_m != "m" || key_q != "Q" ||
        key_size != "size") {
        throw ParseError("not a tempograph field file", 1);
    }
    check_header(n, m, q, side);
    TransitionField<double> field;
    field.source_len = n;
    field.segment_len = m;
    field.bins = static_cast<int>(q);
    field.values.resize(side, side);
    std::string token;
    for (Index r = 0; r < side; ++r) {
        for (Index c = 0; c < side; ++c) {
            if (!(in >> token)) throw ParseError("truncated field matrix", static_cast<std::size_t>(r + 3));
            double v = 0.0;
            const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
            if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
                throw ParseError("bad field value '" + token + "'", static_cast<std::size_t>(r + 3));
            }
            field.values(r, c) = v;
        }
    }
    return field;
}

void write_field_binary(std::ostream& out, const TransitionField<double>& field) {
    out.write(kBinaryMagic.data(), kBinaryMagic.size());
    const std::int64_t header[4] = {field.source_len, field.segment_len, field.bins, field.size()};
    out.write(reinterpret_cast<const char*>(header), sizeof header);
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows = field.values;
    out.write(reinterpret_cast<const char*>(rows.data()),
              static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(rows.size())));
}

TransitionField<double> read_field_binary(std::istream& in) {
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kBinaryMagic) throw ParseError("not a tempograph binary field", 1);
    std::int64_t header[4] = {};
    in.read(reinterpret_cast<char*>(header), sizeof header);
    if (!in) throw ParseError("truncated binary field header", 1);
    check_header(header[0], header[1], header[2], header[3]);
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows(header[3], header[3]);
    in.read(reinterpret_cast<char*>(rows.data()),
            static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(rows.size())));
    if (!in) throw ParseError("truncated binary field matrix", 1);
    TransitionField<double> field;
    field.source_len = header[0];
    field.segment_len = header[1];
    field.bins = static_cast<int>(header[2]);
    field.values = rows;
    return field;
}

void save_field(const std::filesystem::path& path, const TransitionField<double>& field) {
    const bool binary = path.extension() == ".bin";
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw ArgumentError("cannot write " + path.string());
    binary ? write_field_binary(out, field) : write_field_text(out, field);
}

TransitionField<double> load_field(const std::filesystem::path& path) {
    const bool binary = path.extension() == ".bin";
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw ArgumentError("cannot open " + path.string());
    return binary ? read_field_binary(in) : read_field_text(in);
}

}  // namespace tempograph
