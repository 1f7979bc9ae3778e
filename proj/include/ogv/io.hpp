// File formats.
//
// Plane JSON: {"kind":"projective"|"affine","q":int,
//   "field":{"p":int,"n":int,"modulus":[c0,c1,...]},
//   "points":[[x,y,z],...],"lines":[[i0,i1,...],...],"provenance":string}
// with modulus coefficients constant-term first and point coordinates as
// field codes. A family file wraps plane objects as {"planes":[...]}; each
// plane's provenance carries its isomorphism onto the first plane as
// "phi=i0,i1,..." (and "phiproj=..." when the map extends to the full
// projective plane).
//
// CPHF text: header "CPHF n=<n> t=3 k=<k> q=<q> sherwood=<0|1>
// extended=<0|1> lambda=<l>", then n lines of k comma-separated 3-vectors.
// CA text: header "CA(N;3,k,v) lambda=<l>", then N lines of k symbols.
// All writers are byte-deterministic; files are written to a temporary
// path and renamed into place.
#ifndef OGV_IO_HPP
#define OGV_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ogv/covering.hpp"

namespace ogv {

using json = nlohmann::ordered_json;

inline void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("rename failed for " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json plane_to_json(const PlaneIncidence& pl) {
    json j;
    j["kind"] = pl.kind == PlaneKind::projective ? "projective" : "affine";
    j["q"] = pl.q;
    j["field"] = {{"p", pl.field.p}, {"n", pl.field.n}, {"modulus", pl.field.modulus}};
    json pts = json::array();
    for (const auto& c : pl.points) pts.push_back({c[0], c[1], c[2]});
    j["points"] = std::move(pts);
    j["lines"] = pl.lines;
    j["provenance"] = pl.provenance;
    return j;
}

inline PlaneIncidence plane_from_json(const json& j) {
    PlaneIncidence pl;
    const std::string kind = j.at("kind");
    if (kind == "projective") pl.kind = PlaneKind::projective;
    else if (kind == "affine") pl.kind = PlaneKind::affine;
    else throw std::runtime_error("plane file: bad kind");
    pl.q = j.at("q");
    const auto& fj = j.at("field");
    pl.field = FieldSpec::make(fj.at("p"), fj.at("n"), fj.at("modulus").get<std::vector<u32>>());
    for (const auto& p : j.at("points")) pl.points.push_back({p.at(0), p.at(1), p.at(2)});
    pl.num_points = static_cast<u32>(pl.points.size());
    pl.lines = j.at("lines").get<std::vector<std::vector<u32>>>();
    pl.provenance = j.value("provenance", "");
    for (const auto& line : pl.lines)
        for (u32 v : line)
            if (v >= pl.num_points) throw std::runtime_error("plane file: line index out of range");
    return pl;
}

namespace detail {

inline std::string perm_to_string(const std::vector<u32>& perm) {
    std::string s;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(perm[i]);
    }
    return s;
}

inline std::vector<u32> perm_from_string(const std::string& s) {
    std::vector<u32> perm;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        perm.push_back(static_cast<u32>(std::stoul(s.substr(pos, next - pos))));
        pos = next + 1;
    }
    return perm;
}

inline std::string extract_field(const std::string& prov, const std::string& key) {
    const std::string tag = key + "=";
    const size_t at = prov.find(tag);
    if (at == std::string::npos) return {};
    size_t end = prov.find(';', at);
    if (end == std::string::npos) end = prov.size();
    return prov.substr(at + tag.size(), end - at - tag.size());
}

}  // namespace detail

inline std::string family_to_json_text(const PlaneFamily& fam) {
    json j;
    j["planes"] = json::array();
    for (size_t i = 0; i < fam.planes.size(); ++i) {
        PlaneIncidence pl = fam.planes[i];
        pl.provenance = fam.planes[i].provenance;
        if (i < fam.perms.size()) pl.provenance += "; phi=" + detail::perm_to_string(fam.perms[i]);
        if (i < fam.proj_perms.size()) pl.provenance += "; phiproj=" + detail::perm_to_string(fam.proj_perms[i]);
        j["planes"].push_back(plane_to_json(pl));
    }
    return j.dump(1) + "\n";
}

inline std::string plane_to_json_text(const PlaneIncidence& pl) { return plane_to_json(pl).dump(1) + "\n"; }

// Accepts a family file or a single plane object.
inline PlaneFamily family_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    PlaneFamily fam;
    const json planes = j.contains("planes") ? j.at("planes") : json::array({j});
    for (const auto& pj : planes) {
        PlaneIncidence pl = plane_from_json(pj);
        const std::string phi = detail::extract_field(pl.provenance, "phi");
        const std::string phiproj = detail::extract_field(pl.provenance, "phiproj");
        if (!phi.empty()) fam.perms.push_back(detail::perm_from_string(phi));
        if (!phiproj.empty()) fam.proj_perms.push_back(detail::perm_from_string(phiproj));
        fam.planes.push_back(std::move(pl));
    }
    if (fam.perms.size() != fam.planes.size()) fam.perms.clear();
    if (fam.proj_perms.size() != fam.planes.size()) fam.proj_perms.clear();
    if (!fam.planes.empty()) {
        const std::string prov = fam.planes[0].provenance;
        const size_t cut = prov.find(';');
        fam.family = cut == std::string::npos ? prov : prov.substr(0, cut);
        const size_t sp = fam.family.find(' ');
        if (sp != std::string::npos) fam.family = fam.family.substr(0, sp);
    }
    return fam;
}

inline std::string cphf_to_text(const CphfArray& C) {
    std::string s = "CPHF n=" + std::to_string(C.rows) + " t=3 k=" + std::to_string(C.k) + " q=" + std::to_string(C.q) +
                    " sherwood=" + (C.sherwood ? "1" : "0") + " extended=" + (C.extended ? "1" : "0") +
                    " lambda=" + std::to_string(C.lambda) + "\n";
    for (u32 i = 0; i < C.rows; ++i) {
        for (u32 z = 0; z < C.k; ++z) {
            const Vec3& e = C.at(i, z);
            if (z) s += ' ';
            s += std::to_string(e[0]) + ',' + std::to_string(e[1]) + ',' + std::to_string(e[2]);
        }
        s += '\n';
    }
    return s;
}

inline CphfArray cphf_from_text(const std::string& text, const FieldSpec* field_hint = nullptr) {
    std::istringstream in(text);
    std::string word;
    in >> word;
    if (word != "CPHF") throw std::runtime_error("cphf file: bad header");
    CphfArray C;
    auto read_kv = [&](const std::string& key) -> u32 {
        std::string tok;
        in >> tok;
        const std::string tag = key + "=";
        if (tok.rfind(tag, 0) != 0) throw std::runtime_error("cphf file: expected " + key);
        return static_cast<u32>(std::stoul(tok.substr(tag.size())));
    };
    C.rows = read_kv("n");
    if (read_kv("t") != 3) throw std::runtime_error("cphf file: only t=3 supported");
    C.k = read_kv("k");
    C.q = read_kv("q");
    C.sherwood = read_kv("sherwood") != 0;
    C.extended = read_kv("extended") != 0;
    C.lambda = read_kv("lambda");
    if (field_hint && field_hint->q == C.q) {
        C.field = *field_hint;
    } else {
        u64 p = 0;
        if (!is_prime_power(C.q, &p)) throw std::runtime_error("cphf file: q is not a prime power");
        u32 n = 0;
        for (u64 t = 1; t < C.q; t *= p) ++n;
        C.field = FieldSpec::make(static_cast<u32>(p), n);
    }
    C.entries.resize(static_cast<size_t>(C.rows) * C.k);
    for (u32 i = 0; i < C.rows; ++i)
        for (u32 z = 0; z < C.k; ++z) {
            std::string e;
            in >> e;
            if (e.empty()) throw std::runtime_error("cphf file: truncated");
            Vec3 v{};
            if (sscanf(e.c_str(), "%u,%u,%u", &v[0], &v[1], &v[2]) != 3) throw std::runtime_error("cphf file: bad entry");
            C.at(i, z) = v;
        }
    return C;
}

inline std::string ca_to_text(const CoveringArray& A) {
    std::string s = "CA(" + std::to_string(A.N) + ";3," + std::to_string(A.k) + "," + std::to_string(A.v) + ") lambda=" +
                    std::to_string(A.lambda) + "\n";
    for (u32 r = 0; r < A.N; ++r) {
        for (u32 c = 0; c < A.k; ++c) {
            if (c) s += ' ';
            s += std::to_string(A.at(r, c));
        }
        s += '\n';
    }
    return s;
}

inline CoveringArray ca_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    CoveringArray A;
    u32 t = 0;
    if (sscanf(header.c_str(), "CA(%u;%u,%u,%u) lambda=%u", &A.N, &t, &A.k, &A.v, &A.lambda) != 5 || t != 3)
        throw std::runtime_error("ca file: bad header");
    A.data.reserve(static_cast<size_t>(A.N) * A.k);
    u32 x = 0;
    while (in >> x) A.data.push_back(x);
    if (A.data.size() != static_cast<size_t>(A.N) * A.k) throw std::runtime_error("ca file: wrong cell count");
    return A;
}

}  // namespace ogv

#endif  // OGV_IO_HPP
