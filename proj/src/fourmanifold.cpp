#include "dslice/fourmanifold.hpp"

#include <json.hpp>

#include "dslice/errors.hpp"

namespace dslice {
namespace fourman {

FramedLink FramedLink::from_matrix(const IntMat& q) {
    if (!q.square() || q.rows() == 0) throw InputError("linking matrix must be square and nonempty");
    if (!q.is_symmetric()) throw InputError("linking matrix must be symmetric");
    FramedLink l;
    l.q = q;
    return l;
}

mpz_class linking_number(const KnotDiagram& d, int comp_i, int comp_j) {
    int s = 0;
    for (const auto& c : d.crossings) {
        int cu = d.component_of_arc(c.under_in());
        int co = d.component_of_arc(c.over_in());
        if ((cu == comp_i && co == comp_j) || (cu == comp_j && co == comp_i)) s += c.sign;
    }
    if (s % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
    return s / 2;
}

FramedLink FramedLink::from_diagram(const KnotDiagram& d, const std::vector<mpz_class>& framings,
                                    const std::vector<std::tuple<int, int, mpz_class>>& overrides) {
    int n = d.num_components();
    if (n < 1) throw InputError("framed link needs at least one component");
    if (d.free_loops > 0 && !d.crossings.empty())
        throw InputError("crossing-free components are not supported in diagram input");
    if (static_cast<int>(framings.size()) != n)
        throw InputError("expected " + std::to_string(n) + " framings, got " +
                         std::to_string(framings.size()));
    IntMat q(n, n);
    for (int i = 0; i < n; ++i) q.at(i, i) = framings[i];
    if (!d.crossings.empty())
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) q.at(i, j) = q.at(j, i) = linking_number(d, i, j);
    for (const auto& [i, j, v] : overrides) {
        if (i < 1 || i > n || j < 1 || j > n || i == j)
            throw InputError("override indices out of range");
        q.at(i - 1, j - 1) = q.at(j - 1, i - 1) = v;
    }
    return from_matrix(q);
}

FramedLink FramedLink::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("framed link file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("framed link file must be a JSON object");
    for (auto& [key, val] : j.items())
        if (key != "matrix" && key != "diagram" && key != "framings" && key != "overrides")
            throw InputError("unknown key in framed link file: " + key);
    if (j.contains("matrix")) {
        if (j.contains("diagram") || j.contains("framings"))
            throw InputError("give either a matrix or a diagram, not both");
        auto rows = j.at("matrix");
        if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty array of rows");
        IntMat q(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].is_array() || rows[i].size() != rows[0].size())
                throw InputError("matrix rows must be arrays of equal length");
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                if (!rows[i][k].is_number_integer()) throw InputError("matrix entries must be integers");
                q.at(i, k) = mpz_class(rows[i][k].get<long>());
            }
        }
        return from_matrix(q);
    }
    if (!j.contains("diagram") || !j.contains("framings"))
        throw InputError("framed link file needs 'matrix' or 'diagram' + 'framings'");
    KnotDiagram d = parse_pd(j.at("diagram").get<std::string>());
    std::vector<mpz_class> framings;
    for (const auto& f : j.at("framings")) {
        if (!f.is_number_integer()) throw InputError("framings must be integers");
        framings.emplace_back(f.get<long>());
    }
    std::vector<std::tuple<int, int, mpz_class>> overrides;
    if (j.contains("overrides"))
        for (const auto& o : j.at("overrides")) {
            if (!o.is_array() || o.size() != 3) throw InputError("override must be [i, j, lk]");
            overrides.emplace_back(o[0].get<int>(), o[1].get<int>(),
                                   mpz_class(o[2].get<long>()));
        }
    return from_diagram(d, framings, overrides);
}

int form_signature(const IntMat& q) {
    if (!q.is_symmetric()) throw InputError("intersection form must be symmetric");
    return signature_symmetric(q);
}

std::vector<mpz_class> boundary_homology(const IntMat& q) {
    SmithResult s = smith_normal_form(q);
    std::vector<mpz_class> factors;
    for (const auto& d : s.diag)
        if (d != 1) factors.push_back(d);
    return factors;
}

MeridianClass meridian_class(const IntMat& q, int index) {
    int n = static_cast<int>(q.rows());
    if (index < 1 || index > n) throw InputError("meridian index out of range");
    SmithResult s = smith_normal_form(q);
    MeridianClass mc;
    for (int k = 0; k < n; ++k) {
        const mpz_class& d = s.diag[k];
        if (d == 1) continue;  // unit factor: no contribution
        mpz_class c = s.left.at(k, index - 1);
        if (d != 0) {
            c %= d;
            if (c < 0) c += d;
        }
        mc.coords.push_back(c);
        mc.factors.push_back(d);
        if (c != 0) mc.nontrivial = true;
    }
    return mc;
}

HandlebodySummary summarize(const IntMat& q) {
    if (!q.square() || !q.is_symmetric()) throw InputError("linking matrix must be symmetric");
    HandlebodySummary h;
    h.n = static_cast<int>(q.rows());
    h.q = q;
    h.signature = signature_symmetric(q);
    h.chi = 1 + h.n;
    h.chi_capped = 2 + h.n;
    h.b2_capped = h.n;
    h.h1_boundary = boundary_homology(q);
    h.cappable = abs(det(q)) == 1;
    return h;
}

}  // namespace fourman
}  // namespace dslice
