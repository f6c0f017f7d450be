#include "kloc/cli/cache.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "kloc/error.hpp"

namespace kloc {

using nlohmann::json;
namespace fs = std::filesystem;

std::string sha256_hex(std::string const & data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw Error(ErrorKind::InvalidInput, "sha256 failed");
    static char const hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned k = 0; k < len; ++k) {
        out += hex[md[k] >> 4];
        out += hex[md[k] & 15];
    }
    return out;
}

ClassGroupCache::ClassGroupCache(fs::path dir) : dir_(std::move(dir))
{
    if (!dir_.empty()) fs::create_directories(dir_);
}

fs::path ClassGroupCache::entry_path(FieldPtr const & field, Integer const & focus) const
{
    return dir_ / (sha256_hex(field->poly().to_string()) + "-" + focus.get_str() + ".json");
}

namespace {

std::vector<Elem> read_hints(fs::path const & path, std::string const & poly, Integer const & focus, std::size_t n)
{
    std::ifstream in(path);
    if (!in) return {};
    try {
        json j = json::parse(in);
        if (j.at("format_version").get<int>() != ClassGroupCache::format_version) return {};
        if (j.at("polynomial").get<std::string>() != poly || j.at("p").get<std::string>() != focus.get_str()) return {};
        std::vector<Elem> out;
        for (auto const * key : {"relations", "certificates"})
            for (auto const & row : j.at(key)) {
                Elem e;
                for (auto const & c : row) e.emplace_back(c.get<std::string>());
                if (e.size() == n) out.push_back(std::move(e));
            }
        return out;
    } catch (std::exception const &) {
        return {};
    }
}

void write_atomic(fs::path const & path, std::string const & text)
{
    std::random_device rd;
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << text;
        if (!out) throw Error(ErrorKind::InvalidInput, "cannot write cache entry " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace

ClassGroupPtr ClassGroupCache::get(FieldPtr const & field, ClassGroupConfig const & config)
{
    std::string poly = field->poly().to_string();
    std::string key = sha256_hex(poly) + "-" + config.focus.get_str();
    if (auto it = memory_.find(key); it != memory_.end()) {
        ++hits_;
        return it->second;
    }
    if (dir_.empty()) {
        ++misses_;
        return memory_[key] = class_group(field, config);
    }
    fs::path path = entry_path(field, config.focus);
    auto hints = read_hints(path, poly, config.focus, field->degree());
    ClassGroupConfig c = config;
    c.hints.insert(c.hints.end(), hints.begin(), hints.end());
    auto cl = class_group(field, c);
    memory_[key] = cl;
    if (!hints.empty()) {
        ++hits_;
        return cl;
    }
    ++misses_;
    auto rows = [](std::vector<Elem> const & elems) {
        json out = json::array();
        for (auto const & e : elems) {
            json row = json::array();
            for (auto const & x : e) row.push_back(x.get_str());
            out.push_back(row);
        }
        return out;
    };
    std::vector<Elem> rel_elems;
    for (auto const & r : cl->relation_elements()) rel_elems.push_back(r.element);
    json rel = rows(rel_elems);
    json inv = json::array();
    for (auto const & d : cl->structure().invariants()) inv.push_back(d.get_str());
    json entry{{"format_version", format_version}, {"polynomial", poly}, {"p", config.focus.get_str()},
               {"invariants", inv}, {"relations", rel}, {"certificates", rows(cl->certificate_elements())}};
    try {
        write_atomic(path, entry.dump());
    } catch (std::exception const &) {
        /* a read-only cache still answers */
    }
    return cl;
}

} // namespace kloc
