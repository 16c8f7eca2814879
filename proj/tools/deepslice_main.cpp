// deepslice: knot concordance invariants and 4-manifold slice obstructions.
//
// Subcommands compute Seifert-matrix invariants (Alexander polynomial,
// Levine-Tristram signatures, Arf), linking-matrix data of 2-handlebodies,
// Wall self-intersection values, and emit machine-checkable certificates:
// deep-slice witnesses, Rohlin genus bounds, Murasugi-Tristram verdicts and
// universal-slicing refutations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dslice/braid.hpp"
#include "dslice/diagram.hpp"
#include "dslice/errors.hpp"
#include "dslice/fourmanifold.hpp"
#include "dslice/invariants.hpp"
#include "dslice/obstructions.hpp"
#include "dslice/report.hpp"
#include "dslice/seifert.hpp"
#include "dslice/wall.hpp"

namespace {

using namespace dslice;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Reads knot input: a file path, "-" for stdin, or a literal. Formats:
// PD ("X(..) .." or "U"), Gauss ("O1+ U2+ .."), braid ("2 s1 s1 s1").
KnotDiagram parse_knot_text(const std::string& text, const std::string& type) {
    std::istringstream probe(text);
    std::string tok;
    if (!(probe >> tok)) throw InputError("empty knot input");
    std::string t = type;
    if (t == "auto") {
        if (tok[0] == 'X' || tok[0] == 'x' || tok == "U" || tok == "u")
            t = "pd";
        else if ((tok[0] == 'O' || tok[0] == 'o' || tok[0] == 'U') && tok.size() >= 3)
            t = "gauss";
        else if (std::isdigit(static_cast<unsigned char>(tok[0])))
            t = "braid";
        else
            throw InputError("cannot detect knot notation; pass --type pd|gauss|braid");
    }
    if (t == "pd") return parse_pd(text);
    if (t == "gauss") return parse_gauss(text);
    if (t == "braid") return braid_closure(parse_braid(text));
    throw InputError("unknown knot notation type: " + t);
}

std::string maybe_file(const std::string& arg) {
    if (arg == "-") return slurp(arg);
    std::ifstream in(arg);
    if (in) {
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return arg;  // treat as literal
}

void emit(const Report& r, const std::string& format) {
    if (format == "record")
        std::cout << r.to_record() << "\n";
    else
        std::cout << r.to_text();
}

int run(int argc, char** argv) {
    CLI::App app{"knot concordance invariants and 4-manifold slice obstruction certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "record"}))
        ->capture_default_str();

    // knot-invariants
    auto* ki = app.add_subcommand("knot-invariants",
                                  "Alexander polynomial, Levine-Tristram signatures, Arf, genus");
    ki->fallthrough();
    std::string ki_input, ki_type = "auto", ki_matrix;
    std::vector<std::string> ki_omegas;
    ki->add_option("input", ki_input, "knot notation (file, literal, or - for stdin)");
    ki->add_option("--type", ki_type, "pd|gauss|braid|auto")->capture_default_str();
    ki->add_option("--matrix", ki_matrix, "Seifert matrix literal, bypassing diagram parsing");
    ki->add_option("--omega", ki_omegas, "signature sample points a/m (repeatable)");

    // deep-slice
    auto* ds = app.add_subcommand("deep-slice", "deep-slice certificate for a 2-handlebody");
    ds->fallthrough();
    std::string ds_file;
    ds->add_option("link", ds_file, "framed link file (JSON) or - for stdin")->required();

    // rohlin
    auto* ro = app.add_subcommand("rohlin", "Rohlin genus bound for an even class");
    ro->fallthrough();
    std::string ro_matrix, ro_class;
    ro->add_option("matrix", ro_matrix, "linking matrix, |det| = 1")->required();
    ro->add_option("--class", ro_class, "even class vector, e.g. (4)")->required();

    // mt-obstruct
    auto* mt = app.add_subcommand("mt-obstruct", "Murasugi-Tristram sliceness obstruction");
    mt->fallthrough();
    std::string mt_knot, mt_type = "auto", mt_omega = "1/2", mt_manifold;
    int mt_sigma = 0, mt_sign = 0, mt_chi = 0;
    bool mt_have_sigma = false, mt_have_sign = false, mt_have_chi = false;
    mt->add_option("--knot", mt_knot, "knot input (file, literal, or matrix literal)");
    mt->add_option("--type", mt_type, "pd|gauss|braid|matrix|auto")->capture_default_str();
    mt->add_option("--omega", mt_omega, "sample point a/m (must be certified)")->capture_default_str();
    mt->add_option("--manifold", mt_manifold, "linking matrix of the 2-handlebody to cap");
    mt->add_option("--sigma", mt_sigma, "precomputed sigma_K(omega)")->each([&](const std::string&) {
        mt_have_sigma = true;
    });
    mt->add_option("--sign", mt_sign, "sign(X) of the closed manifold")->each([&](const std::string&) {
        mt_have_sign = true;
    });
    mt->add_option("--chi", mt_chi, "chi(X) of the closed manifold")->each([&](const std::string&) {
        mt_have_chi = true;
    });

    // universal-refute
    auto* ur = app.add_subcommand("universal-refute", "universal slicing refutation witness");
    ur->fallthrough();
    int ur_sign = 0, ur_chi = 0, ur_l = 0;
    ur->add_option("--sign", ur_sign, "sign(V)")->required();
    ur->add_option("--chi", ur_chi, "chi(V)")->required();
    ur->add_option("--h1-gens", ur_l, "number of H1(V) generators")->required();

    // family-rule
    auto* fr = app.add_subcommand("family-rule", "static family verdicts");
    fr->fallthrough();
    std::string fr_name;
    int fr_k = 0;
    fr->add_option("family", fr_name, "one-handlebody | s2xd2-sum")->required();
    fr->add_option("k", fr_k, "number of summands")->required();

    // wall-calc
    auto* wc = app.add_subcommand("wall-calc", "Wall self-intersection arithmetic in Lambda~");
    wc->fallthrough();
    std::string wc_file;
    wc->add_option("input", wc_file, "file or - ('gens r' then lines '+|- word')")->required();

    CLI11_PARSE(app, argc, argv);

    if (ki->parsed()) {
        Report rep;
        rep.subcommand = "knot-invariants";
        IntMat v;
        ojson extra;
        std::string raw;
        if (!ki_matrix.empty()) {
            raw = ki_matrix;
            v = parse_matrix(ki_matrix);
            validate_seifert_matrix(v);
        } else {
            if (ki_input.empty()) throw InputError("need a knot input or --matrix");
            raw = maybe_file(ki_input);
            KnotDiagram d = parse_knot_text(raw, ki_type);
            SeifertSurface sf = seifert_surface(d);
            v = seifert_matrix(sf).v;
            extra["crossings"] = d.crossings.size();
            extra["seifert_circles"] = sf.num_circles;
            extra["seifert_bands"] = sf.num_bands;
            extra["genus"] = sf.genus;
        }
        rep.input_digest = fnv1a_digest(raw);
        rep.result = extra;
        rep.result["seifert_matrix"] = v.to_string();
        Laurent delta = alexander(v);
        rep.result["alexander"] = delta.to_string();
        rep.result["det"] = mpz_class(abs(delta.eval_pm1(-1))).get_str();
        rep.result["arf"] = arf(v);
        ojson sig = ojson::object();
        for (const auto& om : ki_omegas) {
            UnitComplexSample w = UnitComplexSample::parse(om);
            int s = lt_signature(v, w);
            sig[w.to_string()] = s;
            if (!w.certified)
                rep.warnings.push_back("omega " + w.to_string() +
                                       " uncertified (order is not a prime power)");
        }
        if (!ki_omegas.empty()) rep.result["sigma"] = sig;
        emit(rep, format);
        return 0;
    }
    if (ds->parsed()) {
        std::string raw = slurp(ds_file);
        fourman::FramedLink link = fourman::FramedLink::from_json_text(raw);
        obstruct::DeepSliceCertificate cert = obstruct::deep_slice_certificate(link);
        Report rep;
        rep.subcommand = "deep-slice";
        rep.input_digest = fnv1a_digest(raw);
        rep.result = deep_slice_json(cert);
        rep.warnings = cert.warnings;
        emit(rep, format);
        return 0;
    }
    if (ro->parsed()) {
        IntMat q = parse_matrix(maybe_file(ro_matrix));
        std::vector<mpz_class> psi = parse_int_vector(ro_class);
        obstruct::RohlinCertificate cert = obstruct::rohlin_bound(q, psi);
        Report rep;
        rep.subcommand = "rohlin";
        rep.input_digest = fnv1a_digest(q.to_string() + "|" + ro_class);
        rep.result = rohlin_json(cert);
        emit(rep, format);
        return 0;
    }
    if (mt->parsed()) {
        UnitComplexSample w = UnitComplexSample::parse(mt_omega);
        int sigma;
        std::string digest_src = mt_omega;
        if (mt_have_sigma) {
            sigma = mt_sigma;
            digest_src += "|sigma=" + std::to_string(sigma);
        } else {
            if (mt_knot.empty()) throw InputError("need --knot or --sigma");
            std::string raw = maybe_file(mt_knot);
            digest_src += "|" + raw;
            IntMat v;
            if (mt_type == "matrix" || (mt_type == "auto" && (raw[0] == '[' || raw.find(';') != std::string::npos))) {
                v = parse_matrix(raw);
                validate_seifert_matrix(v);
            } else {
                v = seifert_matrix_of(parse_knot_text(raw, mt_type)).v;
            }
            sigma = lt_signature(v, w);
        }
        int sign_x, chi;
        if (!mt_manifold.empty()) {
            IntMat q = parse_matrix(maybe_file(mt_manifold));
            fourman::HandlebodySummary h = fourman::summarize(q);
            if (!h.cappable)
                throw PreconditionError("manifold matrix has |det| != 1; capped closure undefined");
            sign_x = h.signature;
            chi = h.chi_capped;
            digest_src += "|" + q.to_string();
        } else {
            if (!mt_have_sign || !mt_have_chi)
                throw InputError("need --manifold or both --sign and --chi");
            sign_x = mt_sign;
            chi = mt_chi;
            digest_src += "|sign=" + std::to_string(sign_x) + "|chi=" + std::to_string(chi);
        }
        obstruct::MTVerdict verdict = obstruct::mt_obstruct(sigma, w, sign_x, chi, true);
        Report rep;
        rep.subcommand = "mt-obstruct";
        rep.input_digest = fnv1a_digest(digest_src);
        rep.result = mt_json(verdict);
        emit(rep, format);
        return 0;
    }
    if (ur->parsed()) {
        obstruct::RefutationWitness w = obstruct::universal_refute(ur_sign, ur_chi, ur_l);
        Report rep;
        rep.subcommand = "universal-refute";
        rep.input_digest = fnv1a_digest(std::to_string(ur_sign) + "|" + std::to_string(ur_chi) +
                                        "|" + std::to_string(ur_l));
        rep.result = refutation_json(w);
        if (w.vacuous)
            rep.warnings.push_back("bound B = 0 is vacuous; witness still reported");
        emit(rep, format);
        return 0;
    }
    if (fr->parsed()) {
        obstruct::FamilyRuleVerdict v = obstruct::family_rules(obstruct::parse_family(fr_name), fr_k);
        Report rep;
        rep.subcommand = "family-rule";
        rep.input_digest = fnv1a_digest(fr_name + "|" + std::to_string(fr_k));
        rep.result = family_rule_json(v);
        emit(rep, format);
        return 0;
    }
    if (wc->parsed()) {
        std::string raw = slurp(wc_file);
        std::istringstream is(raw);
        std::string kw;
        int rank = 0;
        if (!(is >> kw >> rank) || kw != "gens" || rank < 1)
            throw InputError("wall-calc input must start with 'gens <rank>'");
        std::vector<std::pair<int, wall::FreeWord>> points;
        std::string line;
        std::getline(is, line);
        while (std::getline(is, line)) {
            std::istringstream ls(line);
            std::string sign;
            if (!(ls >> sign)) continue;
            int s;
            if (sign == "+")
                s = 1;
            else if (sign == "-")
                s = -1;
            else
                throw InputError("each line must start with + or -: " + line);
            std::string rest;
            std::getline(ls, rest);
            points.emplace_back(s, wall::FreeWord::parse(rest, rank));
        }
        wall::LambdaElement mu = wall::mu_from_double_points(points, rank);
        Report rep;
        rep.subcommand = "wall-calc";
        rep.input_digest = fnv1a_digest(raw);
        rep.result["rank"] = rank;
        rep.result["terms"] = points.size();
        rep.result["mu"] = mu.to_string();
        rep.result["zero"] = mu.is_zero();
        rep.result["verdict"] = mu.is_zero()
                                    ? "mu = 0: no obstruction from the Wall self-intersection number"
                                    : "mu != 0: not null-concordant in Y x I";
        emit(rep, format);
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dslice::PreconditionError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const dslice::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
