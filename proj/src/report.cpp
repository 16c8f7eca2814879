#include "dslice/report.hpp"

#include <iomanip>
#include <sstream>

namespace dslice {

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string Report::to_record() const {
    ojson j;
    j["tool"] = "deepslice";
    j["subcommand"] = subcommand;
    j["input_digest"] = input_digest;
    j["result"] = result;
    j["warnings"] = warnings;
    return j.dump();
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << subcommand << " (input " << input_digest << ") ==\n";
    std::function<void(const ojson&, int)> dump = [&](const ojson& v, int indent) {
        std::string pad(indent, ' ');
        for (auto& [k, val] : v.items()) {
            if (val.is_object()) {
                os << pad << k << ":\n";
                dump(val, indent + 2);
            } else {
                os << pad << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                   << "\n";
            }
        }
    };
    dump(result, 0);
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    return os.str();
}

namespace {

std::string vec_str(const std::vector<mpz_class>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

ojson rohlin_json(const obstruct::RohlinCertificate& c) {
    ojson j;
    j["certificate"] = "rohlin_genus_bound";
    j["psi"] = vec_str(c.psi);
    j["psi_self_intersection"] = c.psi_self.get_str();
    j["sign_x"] = c.sign_x;
    j["b2"] = c.b2;
    j["rhs"] = c.rhs.get_str();
    j["g_min"] = c.g_min.get_str();
    j["inequality"] = "4*g >= |" + c.psi_self.get_str() + " - 2*(" + std::to_string(c.sign_x) +
                      ")| - 2*" + std::to_string(c.b2) + " = " + c.rhs.get_str();
    return j;
}

ojson mt_json(const obstruct::MTVerdict& v) {
    ojson j;
    j["verdict"] = "murasugi_tristram";
    j["sigma"] = v.sigma;
    j["sign_x"] = v.sign_x;
    j["chi"] = v.chi;
    j["omega"] = v.omega.to_string();
    j["omega_certified"] = v.omega.certified;
    j["slack"] = v.slack;
    j["obstructed"] = v.obstructed;
    j["inequality"] = "|" + std::to_string(v.sigma) + " + " + std::to_string(v.sign_x) + "| - " +
                      std::to_string(v.chi) + " + 2 = " + std::to_string(v.slack) +
                      (v.obstructed ? " > 0" : " <= 0");
    return j;
}

ojson refutation_json(const obstruct::RefutationWitness& w) {
    ojson j;
    j["certificate"] = "universal_slicing_refutation";
    j["sign_v"] = w.sign_v;
    j["chi_v"] = w.chi_v;
    j["h1_generators"] = w.h1_generators;
    j["bound"] = w.bound.get_str();
    j["witness_n"] = w.n;
    j["witness_knot"] = "#^" + std::to_string(w.n) + " (left trefoil)";
    j["witness_sigma"] = w.sigma_witness;
    j["sign_surgered"] = w.sign_surgered;
    j["chi_surgered"] = w.chi_surgered;
    j["slack"] = w.slack.get_str();
    j["vacuous"] = w.vacuous;
    j["inequality"] = "|" + std::to_string(w.sigma_witness) + " + " + std::to_string(w.sign_v) +
                      "| - (" + std::to_string(std::abs(w.chi_v)) + " + 2*" +
                      std::to_string(w.h1_generators) + ") + 2 = " + w.slack.get_str() + " > 0";
    return j;
}

ojson deep_slice_json(const obstruct::DeepSliceCertificate& c) {
    ojson j;
    j["certificate"] = "deep_slice";
    switch (c.tag) {
        case obstruct::DeepSliceCase::WALL_MERIDIAN: {
            j["case"] = "WALL_MERIDIAN";
            j["meridian_index"] = c.meridian_index;
            ojson cls;
            cls["coords"] = vec_str(c.meridian->coords);
            cls["factors"] = vec_str(c.meridian->factors);
            cls["nontrivial"] = c.meridian->nontrivial;
            j["meridian_class"] = cls;
            j["mu"] = c.mu->to_string();
            break;
        }
        case obstruct::DeepSliceCase::ROHLIN_CONDITIONAL:
            j["case"] = "ROHLIN_CONDITIONAL";
            j["rohlin"] = rohlin_json(*c.rohlin);
            break;
        case obstruct::DeepSliceCase::FAMILY_RULE_NONE:
            j["case"] = "FAMILY_RULE_NONE";
            break;
        case obstruct::DeepSliceCase::INDETERMINATE:
            j["case"] = "INDETERMINATE";
            break;
    }
    j["witness"] = c.witness_description;
    return j;
}

ojson family_rule_json(const obstruct::FamilyRuleVerdict& v) {
    ojson j;
    j["rule"] = v.family == obstruct::ManifoldFamily::ONE_HANDLEBODY ? "one-handlebody"
                                                                     : "s2xd2-sum";
    j["k"] = v.k;
    j["deep_slice_exists"] = v.deep_slice_exists;
    j["local_deep_slice_exists"] = v.local_deep_slice_exists;
    j["statement"] = v.statement;
    return j;
}

bool verify_record(const std::string& record_line) {
    ojson j = ojson::parse(record_line);
    const ojson& r = j.at("result");
    auto has = [&](const char* k) { return r.contains(k); };

    if (has("verdict") && r["verdict"] == "murasugi_tristram") {
        long slack = std::labs(r["sigma"].get<long>() + r["sign_x"].get<long>()) -
                     r["chi"].get<long>() + 2;
        if (slack != r["slack"].get<long>()) return false;
        if ((slack > 0) != r["obstructed"].get<bool>()) return false;
        return r["omega_certified"].get<bool>();
    }
    if (has("certificate") && r["certificate"] == "rohlin_genus_bound") {
        mpz_class self(r["psi_self_intersection"].get<std::string>());
        mpz_class rhs = abs(self - 2 * r["sign_x"].get<long>()) - 2 * r["b2"].get<long>();
        if (rhs.get_str() != r["rhs"].get<std::string>()) return false;
        mpz_class g(r["g_min"].get<std::string>());
        return 4 * g >= rhs && (g == 0 || 4 * (g - 1) < rhs);
    }
    if (has("certificate") && r["certificate"] == "universal_slicing_refutation") {
        mpz_class bound(r["bound"].get<std::string>());
        long n = r["witness_n"].get<long>();
        if (2 * n < bound) return false;
        mpz_class slack = abs(mpz_class(r["witness_sigma"].get<long>()) + r["sign_v"].get<long>()) -
                          (mpz_class(std::labs(r["chi_v"].get<long>())) +
                           2 * r["h1_generators"].get<long>()) +
                          2;
        return slack.get_str() == r["slack"].get<std::string>() && slack > 0;
    }
    if (has("certificate") && r["certificate"] == "deep_slice") {
        std::string c = r["case"].get<std::string>();
        if (c == "WALL_MERIDIAN") return r["meridian_class"]["nontrivial"].get<bool>();
        if (c == "ROHLIN_CONDITIONAL") {
            mpz_class g(r["rohlin"]["g_min"].get<std::string>());
            return g >= 1;
        }
        return false;
    }
    return true;  // nothing checkable
}

}  // namespace dslice
