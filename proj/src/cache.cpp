#include "tripart/cache.hpp"

#include <fstream>
#include <sstream>

#include <boost/crc.hpp>
#include <json.hpp>

#include "tripart/errors.hpp"
#include "tripart/version.hpp"

namespace tripart {
namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheMissing("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << bytes;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string flags_string(const PredicateFlags& f) {
    std::string s;
    const auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += ',';
        s += name;
    };
    add(f.f5free, "f5free");
    add(f.k4mfree, "k4mfree");
    add(f.cancellative, "cancellative");
    add(f.tripartite, "tripartite");
    return s.empty() ? "none" : s;
}

PredicateFlags parse_flags(const std::string& s, std::size_t line) {
    PredicateFlags f;
    if (s == "none") return f;
    std::istringstream in(s);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name == "f5free") f.f5free = true;
        else if (name == "k4mfree") f.k4mfree = true;
        else if (name == "cancellative") f.cancellative = true;
        else if (name == "tripartite") f.tripartite = true;
        else throw ParseError(line, "unknown flag '" + name + "'");
    }
    return f;
}

std::string hex32(std::uint32_t x) {
    std::ostringstream s;
    s << std::hex;
    s.width(8);
    s.fill('0');
    s << x;
    return s.str();
}

} // namespace

std::uint32_t crc32_of(const std::string& bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::filesystem::path cache_records_path(const std::filesystem::path& dir, int n, const std::string& predicate) {
    return dir / ("n" + std::to_string(n) + "-" + predicate + ".records");
}

std::filesystem::path cache_manifest_path(const std::filesystem::path& dir, int n, const std::string& predicate) {
    return dir / ("n" + std::to_string(n) + "-" + predicate + ".manifest.json");
}

bool cache_exists(const std::filesystem::path& dir, int n, const std::string& predicate) {
    return std::filesystem::exists(cache_manifest_path(dir, n, predicate)) &&
           std::filesystem::exists(cache_records_path(dir, n, predicate));
}

std::string serialize_records(const std::vector<EnumRecord>& records) {
    std::string out;
    for (const EnumRecord& r : records) {
        out += "@ aut=" + std::to_string(r.aut_order()) + " flags=" + flags_string(r.flags) + "\n";
        out += serialize_system(r.system());
    }
    return out;
}

std::vector<EnumRecord> parse_records(const std::string& text, int n) {
    std::vector<EnumRecord> records;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::size_t block_start = 0;
    std::string block;
    std::uint64_t aut = 0;
    PredicateFlags flags;
    bool open = false;

    const auto flush = [&] {
        if (!open) return;
        TripleSystem h;
        try {
            h = parse_system(block);
        } catch (const ParseError& e) {
            throw ParseError(block_start + e.line(), e.what());
        }
        if (h.order() != n) throw ParseError(block_start + 1, "record has " + std::to_string(h.order()) + " vertices");
        EnumRecord r;
        r.form.n = n;
        r.form.key.assign(h.slot_words().begin(), h.slot_words().end());
        r.form.aut_order = aut;
        r.edge_count = h.size();
        r.flags = flags;
        records.push_back(std::move(r));
        block.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.rfind("@", 0) == 0) {
            flush();
            std::istringstream hdr(line.substr(1));
            std::string aut_tok;
            std::string flag_tok;
            if (!(hdr >> aut_tok >> flag_tok) || aut_tok.rfind("aut=", 0) != 0 || flag_tok.rfind("flags=", 0) != 0) {
                throw ParseError(line_no, "expected '@ aut=<k> flags=<list>'");
            }
            try {
                aut = std::stoull(aut_tok.substr(4));
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad automorphism count");
            }
            if (aut == 0) throw ParseError(line_no, "automorphism count must be positive");
            flags = parse_flags(flag_tok.substr(6), line_no);
            block_start = line_no;
            open = true;
            continue;
        }
        if (!open) {
            if (line.empty()) continue;
            throw ParseError(line_no, "content before the first record header");
        }
        block += line;
        block += '\n';
    }
    flush();
    return records;
}

CacheManifest cache_write(const std::filesystem::path& dir, int n, const std::string& predicate,
                          const std::vector<EnumRecord>& records) {
    std::filesystem::create_directories(dir);
    const std::string bytes = serialize_records(records);
    const CountTable table = tabulate(n, predicate, records);

    CacheManifest m;
    m.tool_version = kToolVersion;
    m.predicate = predicate;
    m.n = n;
    m.classes = records.size();
    m.labeled_total = table.labeled_total;
    m.checksum = crc32_of(bytes);
    m.classes_by_edges = table.unlabeled_by_edges;
    m.labeled_by_edges = table.labeled_by_edges;

    nlohmann::ordered_json j;
    j["tool_version"] = m.tool_version;
    j["predicate"] = m.predicate;
    j["n"] = m.n;
    j["classes"] = m.classes;
    j["labeled_total"] = m.labeled_total.str();
    j["records_file"] = cache_records_path(dir, n, predicate).filename().string();
    j["crc32"] = hex32(m.checksum);
    j["classes_by_edges"] = m.classes_by_edges;
    std::vector<std::string> labeled;
    for (const auto& x : m.labeled_by_edges) labeled.push_back(x.str());
    j["labeled_by_edges"] = labeled;

    write_file(cache_records_path(dir, n, predicate), bytes);
    write_file(cache_manifest_path(dir, n, predicate), j.dump(2) + "\n");
    return m;
}

CacheEntry cache_read(const std::filesystem::path& dir, int n, const std::string& predicate) {
    if (!cache_exists(dir, n, predicate)) {
        throw CacheMissing("no cache for n=" + std::to_string(n) + " predicate=" + predicate + " in " + dir.string() +
                           "; run 'tripart enumerate --n " + std::to_string(n) + " --predicate " + predicate +
                           " --cache-dir " + dir.string() + "' first");
    }
    const std::string refuse = "; delete it and re-run enumerate";
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(cache_manifest_path(dir, n, predicate)));
    } catch (const nlohmann::json::exception& e) {
        throw ChecksumMismatch("unreadable cache manifest: " + std::string(e.what()) + refuse);
    }
    CacheEntry entry;
    auto& m = entry.manifest;
    try {
        m.tool_version = j.at("tool_version").get<std::string>();
        m.predicate = j.at("predicate").get<std::string>();
        m.n = j.at("n").get<int>();
        m.classes = j.at("classes").get<std::uint64_t>();
        m.labeled_total = BigInt(j.at("labeled_total").get<std::string>());
        m.checksum = static_cast<std::uint32_t>(std::stoul(j.at("crc32").get<std::string>(), nullptr, 16));
        m.classes_by_edges = j.at("classes_by_edges").get<std::vector<std::uint64_t>>();
        for (const auto& s : j.at("labeled_by_edges").get<std::vector<std::string>>()) m.labeled_by_edges.emplace_back(s);
    } catch (const std::exception& e) {
        throw ChecksumMismatch("malformed cache manifest: " + std::string(e.what()) + refuse);
    }
    if (m.n != n || m.predicate != predicate) throw ChecksumMismatch("cache manifest describes another entry" + refuse);

    const std::string bytes = read_file(cache_records_path(dir, n, predicate));
    const std::uint32_t actual = crc32_of(bytes);
    if (actual != m.checksum) {
        throw ChecksumMismatch("cache checksum mismatch for n=" + std::to_string(n) + " predicate=" + predicate +
                               " (manifest " + hex32(m.checksum) + ", file " + hex32(actual) + ")" + refuse);
    }
    try {
        entry.records = parse_records(bytes, n);
    } catch (const ParseError& e) {
        throw ChecksumMismatch("cache records do not parse: " + std::string(e.what()) + refuse);
    }
    const CountTable table = tabulate(n, predicate, entry.records);
    if (entry.records.size() != m.classes || table.labeled_total != m.labeled_total) {
        throw ChecksumMismatch("cache records disagree with manifest counts" + refuse);
    }
    for (const EnumRecord& r : entry.records) {
        const CanonicalForm f = canonical_form(r.system(), kHardCanonicalBound);
        if (!(f == r.form) || f.aut_order != r.aut_order()) {
            throw ChecksumMismatch("cache record " + to_string(r.system()) + " is not in canonical form" + refuse);
        }
    }
    return entry;
}

} // namespace tripart
