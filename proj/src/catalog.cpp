#include "gbcodex/catalog.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "gbcodex/gbcode.hpp"

namespace gbcodex {

using nlohmann::json;

namespace {

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

Vec2 vec_from(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected a 2-vector");
    }
    return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

json optional_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> optional_from(const json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<std::int64_t>();
}

}  // namespace

json header_to_json(const CatalogHeader& h) {
    return {{"type", "header"},
            {"schema_version", kCatalogSchemaVersion},
            {"max_length", h.max_length},
            {"seed", h.seed},
            {"oracle_cap", h.oracle_cap},
            {"parity", h.parity},
            {"certificate_slack", h.certificate_slack},
            {"records", h.records}};
}

json entry_to_json(const CatalogEntry& e) {
    const DistanceReport& r = e.report;
    json cert = json::array();
    for (std::size_t i : r.certificate.vector.support()) {
        cert.push_back(i);
    }
    return {{"type", "entry"},
            {"n", e.n},
            {"alpha", e.alpha},
            {"alpha_mirror", e.alpha_mirror},
            {"length", e.length},
            {"k", e.k},
            {"d", r.distance()},
            {"lower", r.lower_bound},
            {"upper", r.upper_bound},
            {"exact", optional_json(r.exact)},
            {"method", to_string(r.method)},
            {"closed_by", to_string(r.closed_by)},
            {"lattice_lower", r.lattice_bound.value},
            {"lattice_hypothesis", r.lattice_bound.hypothesis_met},
            {"parity_lower", optional_json(r.parity_lower)},
            {"lambda_sq", e.lattice.lambda_sq},
            {"min_l1", e.lattice.min_l1},
            {"min_l1_witness", vec_json(e.lattice.min_l1_witness)},
            {"reduced_basis", json::array({vec_json(e.lattice.reduced_b1), vec_json(e.lattice.reduced_b2)})},
            {"certificate", cert},
            {"certificate_t", vec_json(r.certificate.displacement)},
            {"oracle_dx", optional_json(r.oracle_dx)},
            {"oracle_dz", optional_json(r.oracle_dz)},
            {"provenance", to_string(e.provenance)}};
}

CatalogEntry entry_from_json(const json& j) {
    if (j.value("type", "") != "entry") {
        throw std::invalid_argument("record is not an entry");
    }
    CatalogEntry e;
    e.n = j.at("n").get<std::int64_t>();
    e.alpha = j.at("alpha").get<std::int64_t>();
    e.alpha_mirror = j.at("alpha_mirror").get<std::int64_t>();
    e.length = j.at("length").get<std::int64_t>();
    e.k = j.at("k").get<std::int64_t>();
    if (e.n < 2 || e.length != 2 * e.n) {
        throw std::invalid_argument("length must be 2n with n >= 2");
    }

    DistanceReport& r = e.report;
    r.n = e.n;
    r.alpha = e.alpha;
    r.k = e.k;
    r.lower_bound = j.at("lower").get<std::int64_t>();
    r.upper_bound = j.at("upper").get<std::int64_t>();
    r.exact = optional_from(j.at("exact"));
    r.method = method_from_string(j.at("method").get<std::string>());
    r.closed_by = closed_by_from_string(j.at("closed_by").get<std::string>());
    r.lattice_bound.value = j.at("lattice_lower").get<std::int64_t>();
    r.lattice_bound.hypothesis_met = j.at("lattice_hypothesis").get<bool>();
    r.lattice_bound.lambda_sq = j.at("lambda_sq").get<std::int64_t>();
    r.parity_lower = optional_from(j.at("parity_lower"));
    r.oracle_dx = optional_from(j.at("oracle_dx"));
    r.oracle_dz = optional_from(j.at("oracle_dz"));

    std::vector<std::size_t> bits;
    for (const auto& b : j.at("certificate")) {
        const auto i = b.get<std::int64_t>();
        if (i < 0 || i >= e.length) {
            throw std::invalid_argument("certificate bit " + std::to_string(i) + " outside [0, 2n)");
        }
        if (!bits.empty() && static_cast<std::size_t>(i) <= bits.back()) {
            throw std::invalid_argument("certificate bits not strictly ascending");
        }
        bits.push_back(static_cast<std::size_t>(i));
    }
    r.certificate.vector = BitVector::from_support(static_cast<std::size_t>(e.length), bits);
    r.certificate.weight = static_cast<std::int64_t>(bits.size());
    r.certificate.displacement = vec_from(j.at("certificate_t"));

    e.lattice.lambda_sq = r.lattice_bound.lambda_sq;
    e.lattice.min_l1 = j.at("min_l1").get<std::int64_t>();
    e.lattice.min_l1_witness = vec_from(j.at("min_l1_witness"));
    const json& basis = j.at("reduced_basis");
    if (!basis.is_array() || basis.size() != 2) {
        throw std::invalid_argument("reduced_basis must hold two vectors");
    }
    e.lattice.reduced_b1 = vec_from(basis.at(0));
    e.lattice.reduced_b2 = vec_from(basis.at(1));
    e.provenance = provenance_from_string(j.at("provenance").get<std::string>());

    if (j.at("d").get<std::int64_t>() != r.distance()) {
        throw std::invalid_argument("d disagrees with exact/upper");
    }
    return e;
}

std::string to_ndjson(const CatalogHeader& header, const std::vector<CatalogEntry>& entries) {
    std::string out = header_to_json(header).dump() + "\n";
    for (const auto& e : entries) {
        out += entry_to_json(e).dump() + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<CatalogEntry>& entries) {
    std::ostringstream out;
    out << "length,k,d,n,alpha,lower,upper,method\n";
    for (const auto& e : entries) {
        const DistanceReport& r = e.report;
        out << e.length << ',' << e.k << ',' << r.distance() << ',' << e.n << ',' << e.alpha << ','
            << r.lower_bound << ',' << r.upper_bound << ',' << to_string(r.method) << '\n';
    }
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

std::vector<std::string> check_entry(const CatalogEntry& e) {
    std::vector<std::string> problems;
    const auto fail = [&](std::string msg) { problems.push_back(std::move(msg)); };
    const DistanceReport& r = e.report;

    if (e.alpha < 1 || e.alpha > e.n - 1 || e.alpha + e.alpha_mirror != e.n) {
        fail("alpha / alpha_mirror inconsistent with n");
        return problems;
    }
    if ((static_cast<__int128>(e.alpha) * e.alpha + 1) % e.n != 0) {
        fail("alpha^2 + 1 is not divisible by n");
    }

    std::optional<CssCode> code;
    try {
        code.emplace(build(CanonicalW2{e.alpha, e.n}));
    } catch (const std::exception& ex) {
        fail(std::string("code construction failed: ") + ex.what());
        return problems;
    }
    const auto k_rank = static_cast<std::int64_t>(code->dimension());
    const auto k_formula = static_cast<std::int64_t>(dimension_formula(CanonicalW2{e.alpha, e.n}.spec()));
    if (k_rank != k_formula) {
        fail("rank-based k " + std::to_string(k_rank) + " != gcd-formula k " + std::to_string(k_formula));
    }
    if (e.k != k_rank) {
        fail("recorded k " + std::to_string(e.k) + " != computed " + std::to_string(k_rank));
    }

    const LowerBound lb = lattice_lower_bound(e.alpha, e.n);
    if (lb.lambda_sq != e.lattice.lambda_sq || lb.value != r.lattice_bound.value) {
        fail("lattice bound does not recompute");
    }
    if (lb.lambda_sq < e.n || lb.lambda_sq % e.n != 0) {
        fail("lambda^2 is not a positive multiple of n");
    }
    if (static_cast<std::uint64_t>(r.lower_bound) < ceil_sqrt(static_cast<std::uint64_t>(e.n))) {
        fail("lower bound below ceil(sqrt(n))");
    }
    if (min_l1(gb_lattice(e.alpha, e.n)).l1 != e.lattice.min_l1) {
        fail("min_l1 does not recompute");
    }

    if (r.lower_bound > r.upper_bound) {
        fail("lower bound exceeds upper bound");
    }
    if (r.exact && (*r.exact < r.lower_bound || *r.exact > r.upper_bound)) {
        fail("exact distance outside [lower, upper]");
    }
    if (r.method != Method::IntervalOnly && !r.exact) {
        fail("closed method without exact distance");
    }
    if (r.oracle_dx && r.oracle_dz && *r.oracle_dx != *r.oracle_dz) {
        fail("oracle d_X != d_Z");
    }
    if (r.oracle_dx && r.exact && *r.oracle_dx != *r.exact) {
        fail("oracle distance disagrees with exact");
    }

    if (r.certificate.weight != r.upper_bound) {
        fail("certificate weight " + std::to_string(r.certificate.weight) + " != upper bound " +
             std::to_string(r.upper_bound));
    }
    if (!code->is_logical_x(r.certificate.vector)) {
        fail("certificate is not a logical operator");
    }
    return problems;
}

VerifyResult verify_catalog(std::istream& in) {
    VerifyResult result;
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& ex) {
            result.issues.push_back({line_no, std::string("unparseable record: ") + ex.what()});
            continue;
        }
        const std::string type = record.is_object() ? record.value("type", "") : "";
        if (type == "header") {
            if (seen_header || result.records > 0) {
                result.issues.push_back({line_no, "unexpected header record"});
            }
            if (record.value("schema_version", -1) != kCatalogSchemaVersion) {
                result.issues.push_back({line_no, "unsupported schema version"});
            }
            seen_header = true;
            continue;
        }
        ++result.records;
        CatalogEntry entry;
        try {
            entry = entry_from_json(record);
        } catch (const std::exception& ex) {
            result.issues.push_back({line_no, std::string("corrupt record: ") + ex.what()});
            continue;
        }
        for (auto& problem : check_entry(entry)) {
            result.issues.push_back(
                {line_no, "record n=" + std::to_string(entry.n) + " alpha=" + std::to_string(entry.alpha) + ": " +
                              problem});
        }
    }
    if (result.records == 0) {
        result.warnings.emplace_back("0 records");
    }
    return result;
}

}  // namespace gbcodex
