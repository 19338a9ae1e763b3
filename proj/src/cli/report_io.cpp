#include "wildram/report_io.hpp"

#include <json.hpp>

#include "wildram/errors.hpp"

namespace wildram {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& q) {
    if (q.denominator() == 1) return q.numerator();
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational rational_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            try {
                std::size_t used_n = 0, used_d = 0;
                const std::int64_t n = std::stoll(s.substr(0, slash), &used_n);
                const std::int64_t d = std::stoll(s.substr(slash + 1), &used_d);
                if (used_n == slash && used_d == s.size() - slash - 1 && d > 0) return Rational(n, d);
            } catch (const std::exception&) {
            }
        }
    }
    throw ParseError("jump must be an integer or an \"a/b\" string, got " + j.dump(), 1, 1);
}

ordered_json jumps_json(const std::vector<Rational>& js) {
    ordered_json a = ordered_json::array();
    for (const Rational& q : js) a.push_back(rational_json(q));
    return a;
}

std::string show(const Rational& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

template <class T>
std::string join(const std::vector<T>& xs, std::string (*f)(const T&)) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + f(xs[i]);
    return s + ")";
}

std::string show_int(const std::int64_t& v) { return std::to_string(v); }

}  // namespace

std::string report_to_json(const RamReport& r) {
    ordered_json j;
    j["group"] = r.group;
    j["case"] = r.case_label;
    j["upper_jumps"] = jumps_json(r.upper_jumps);
    j["lower_jumps"] = jumps_json(r.lower_jumps);
    j["orders"] = r.orders;
    j["different_degree"] = r.different_degree ? ordered_json(*r.different_degree) : ordered_json(nullptr);
    j["genus"] = r.genus ? ordered_json(*r.genus) : ordered_json(nullptr);
    j["status"] = to_string(r.status);
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

RamReport report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 1, int(e.byte));
    }
    try {
        RamReport r;
        r.group = j.at("group").get<std::string>();
        r.case_label = j.at("case").get<std::string>();
        for (const auto& q : j.at("upper_jumps")) r.upper_jumps.push_back(rational_from_json(q));
        for (const auto& q : j.at("lower_jumps")) r.lower_jumps.push_back(rational_from_json(q));
        r.orders = j.at("orders").get<std::vector<std::int64_t>>();
        if (!j.at("different_degree").is_null()) r.different_degree = j.at("different_degree").get<std::int64_t>();
        if (!j.at("genus").is_null()) r.genus = j.at("genus").get<std::int64_t>();
        const auto st = status_from_string(j.at("status").get<std::string>());
        if (!st) throw ParseError("unknown status " + j.at("status").dump(), 1, 1);
        r.status = *st;
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report schema violation: ") + e.what(), 1, 1);
    }
}

std::string report_to_text(const RamReport& r) {
    std::string s;
    s += "group:            " + r.group + "\n";
    s += "case:             " + r.case_label + "\n";
    s += "upper jumps:      " + join(r.upper_jumps, show) + "\n";
    s += "lower jumps:      " + join(r.lower_jumps, show) + "\n";
    s += "orders:           " + join(r.orders, show_int) + "\n";
    s += "different degree: " + (r.different_degree ? std::to_string(*r.different_degree) : "-") + "\n";
    if (r.genus) s += "genus:            " + std::to_string(*r.genus) + "\n";
    s += "status:           " + to_string(r.status) + "\n";
    for (const std::string& n : r.notes) s += "  note: " + n + "\n";
    return s;
}

int exit_code(Status s) {
    switch (s) {
        case Status::FormulaOnly:
        case Status::OracleConfirmed: return 0;
        case Status::Undetermined: return 2;
        case Status::DiscrepancyFlag: return 3;
    }
    return kExitHardError;
}

}  // namespace wildram
