#include "motsq/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace motsq {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    return h;
}

namespace {

std::string hex(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << v;
    return out.str();
}

std::atomic<unsigned> g_tmp_counter{0};

}  // namespace

void atomic_write(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(g_tmp_counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) {
            fs::remove(tmp);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

ExtCache::ExtCache(fs::path root, std::string params) : params_(std::move(params)) {
    dir_ = std::move(root) / ("ext-v" + std::to_string(kCacheVersion) + "-" + hex(fnv1a(params_)));
}

fs::path ExtCache::record_path(TriDegree t) const { return dir_ / ("ext_" + t.to_string() + ".rec"); }

std::optional<CachedGroup> ExtCache::load(TriDegree t, std::uint64_t basis_hash, std::size_t basis_size) {
    std::ifstream in(record_path(t));
    if (!in) return std::nullopt;
    std::string line, body;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    auto reject = [this]() -> std::optional<CachedGroup> {
        std::lock_guard lock(mu_);
        ++rejected_;
        return std::nullopt;
    };
    if (lines.size() < 6) return reject();
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) body += lines[i] + "\n";
    if (lines.back() != "checksum " + hex(fnv1a(body))) return reject();
    if (lines[0] != "motsq-ext v" + std::to_string(kCacheVersion)) return reject();
    if (lines[1] != "params " + params_) return reject();
    if (lines[2] != "tridegree " + t.to_string()) return reject();
    if (lines[3] != "basis " + std::to_string(basis_size) + " " + hex(basis_hash)) return reject();
    std::istringstream dim_line(lines[4]);
    std::string tag;
    std::size_t dim = 0;
    if (!(dim_line >> tag >> dim) || tag != "dim" || lines.size() != 6 + dim) return reject();
    CachedGroup g{basis_hash, basis_size, {}};
    for (std::size_t j = 0; j < dim; ++j) {
        std::istringstream rep(lines[5 + j]);
        std::size_t n = 0;
        if (!(rep >> tag >> n) || tag != "rep") return reject();
        std::vector<std::uint32_t> idx(n);
        for (auto& i : idx)
            if (!(rep >> i) || i >= basis_size) return reject();
        g.reps.push_back(std::move(idx));
    }
    return g;
}

void ExtCache::store(TriDegree t, const CachedGroup& g) {
    std::ostringstream out;
    out << "motsq-ext v" << kCacheVersion << "\n"
        << "params " << params_ << "\n"
        << "tridegree " << t.to_string() << "\n"
        << "basis " << g.basis_size << " " << hex(g.basis_hash) << "\n"
        << "dim " << g.reps.size() << "\n";
    for (const auto& r : g.reps) {
        out << "rep " << r.size();
        for (auto i : r) out << " " << i;
        out << "\n";
    }
    std::string body = out.str();
    body += "checksum " + hex(fnv1a(body)) + "\n";
    std::lock_guard lock(mu_);
    atomic_write(record_path(t), body);
}

}  // namespace motsq
