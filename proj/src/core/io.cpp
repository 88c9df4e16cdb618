#include "core/io.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <cerrno>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

namespace graphbench {

namespace {

constexpr char kMagic[8] = {'G', 'B', 'G', 'R', 'A', 'P', 'H', '1'};

void put_u64_le(unsigned char* p, uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

uint64_t get_u64_le(const unsigned char* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
    return v;
}

std::vector<Edge> sorted_edges(const EdgeList& el) {
    std::vector<Edge> edges = el.edges;
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
    return edges;
}

EdgeList read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open for reading: " + path);
    EdgeList el;
    uint64_t declared_n = 0;
    uint64_t max_endpoint = 0;
    bool any = false;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            uint64_t n = 0;
            if (std::sscanf(line.c_str(), "# n %" SCNu64, &n) == 1) declared_n = n;
            continue;
        }
        uint64_t src = 0, dst = 0;
        double w = 1.0;
        char extra[2];
        int got = std::sscanf(line.c_str(), "%" SCNu64 " %" SCNu64 " %lf %1s", &src, &dst, &w, extra);
        if (got == 2) {
            el.add(src, dst);
        } else if (got == 3) {
            if (w < 0.0) throw parse_error(path + ":" + std::to_string(lineno) + ": negative weight", lineno);
            el.add(src, dst, w);
            el.weighted = true;
        } else {
            throw parse_error(path + ":" + std::to_string(lineno) + ": malformed edge line", lineno);
        }
        max_endpoint = std::max({max_endpoint, src, dst});
        any = true;
    }
    el.n = std::max(declared_n, any ? max_endpoint + 1 : uint64_t{0});
    return el;
}

EdgeList read_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open for reading: " + path);
    unsigned char header[16];
    if (!in.read(reinterpret_cast<char*>(header), 16))
        throw parse_error(path + ": truncated header", 0);
    if (std::memcmp(header, kMagic, 8) != 0)
        throw parse_error(path + ": bad magic, not a GBGRAPH1 file", 0);
    EdgeList el;
    el.n = get_u64_le(header + 8);
    unsigned char rec[16];
    while (in.read(reinterpret_cast<char*>(rec), 16)) {
        uint64_t src = get_u64_le(rec);
        uint64_t dst = get_u64_le(rec + 8);
        if (src >= el.n || dst >= el.n)
            throw invalid_input_error(path + ": endpoint exceeds header vertex count");
        el.add(src, dst);
    }
    if (in.gcount() != 0) throw parse_error(path + ": truncated edge record", 0);
    return el;
}

void write_text(const EdgeList& el, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw io_error("cannot open for writing: " + path + " (" + std::strerror(errno) + ")");
    auto closer = std::unique_ptr<std::FILE, int (*)(std::FILE*)>(f, &std::fclose);
    std::fprintf(f, "# n %" PRIu64 "\n", el.n);
    for (const Edge& e : sorted_edges(el)) {
        if (el.weighted)
            std::fprintf(f, "%" PRIu64 " %" PRIu64 " %.17g\n", e.src, e.dst, e.weight);
        else
            std::fprintf(f, "%" PRIu64 " %" PRIu64 "\n", e.src, e.dst);
    }
    if (std::ferror(f)) throw io_error("write failed: " + path);
}

void write_binary(const EdgeList& el, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw io_error("cannot open for writing: " + path + " (" + std::strerror(errno) + ")");
    auto closer = std::unique_ptr<std::FILE, int (*)(std::FILE*)>(f, &std::fclose);
    unsigned char header[16];
    std::memcpy(header, kMagic, 8);
    put_u64_le(header + 8, el.n);
    std::fwrite(header, 1, 16, f);
    unsigned char rec[16];
    for (const Edge& e : sorted_edges(el)) {
        put_u64_le(rec, e.src);
        put_u64_le(rec + 8, e.dst);
        std::fwrite(rec, 1, 16, f);
    }
    if (std::ferror(f)) throw io_error("write failed: " + path);
}

} // namespace

FileFormat format_from_str(const std::string& s) {
    if (s == "text") return FileFormat::Text;
    if (s == "binary") return FileFormat::Binary;
    throw invalid_input_error("unknown format: " + s + " (expected text|binary)");
}

const char* format_str(FileFormat f) { return f == FileFormat::Text ? "text" : "binary"; }

FileFormat sniff_format(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0 ? FileFormat::Binary
                                                                             : FileFormat::Text;
}

EdgeList read_edge_list(const std::string& path, FileFormat format) {
    return format == FileFormat::Text ? read_text(path) : read_binary(path);
}

void write_edge_list(const EdgeList& edges, const std::string& path, FileFormat format) {
    if (format == FileFormat::Text)
        write_text(edges, path);
    else
        write_binary(edges, path);
}

} // namespace graphbench
