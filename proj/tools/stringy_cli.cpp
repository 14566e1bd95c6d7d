#include "stringy/report_json.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace stringy;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string plain(const Rat& a) {
    return a.get_den() == 1 ? a.get_num().get_str() : rat_str(a);
}

std::string row_str(const QVec& v) {
    std::string s;
    for (size_t j = 0; j < v.size(); ++j) s += (j ? " " : "") + plain(v[j]);
    return s;
}

std::string row_str(const IVec& v) {
    std::string s;
    for (size_t j = 0; j < v.size(); ++j) s += (j ? " " : "") + v[j].get_str();
    return s;
}

std::string poly_str(const UPoly& p) {
    const std::vector<Rat>& c = p.coefficients();
    if (c.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += (c[i] > 0) ? " + " : " - ";
        else if (c[i] < 0) s += "-";
        Rat a = abs(c[i]);
        if (a != 1 || i == 0) s += plain(a);
        if (i >= 1) {
            if (a != 1) s += "*";
            s += "u";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

struct Options {
    bool json = false;
    bool translate = false;
    bool check = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_fine_text(const FineResult& r) {
    if (r.interior_empty) {
        std::cout << "fine interior: empty\n";
        return;
    }
    std::cout << "fine interior: dim " << r.interior_dim << "\n";
    for (const QVec& v : r.interior_vertices) std::cout << "  vertex: " << row_str(v) << "\n";
    std::cout << "support: " << r.support.size() << " directions\n";
    for (const IVec& n : r.support) std::cout << "  " << row_str(n) << "\n";
    if (r.hull_bounded) {
        std::cout << "canonical hull: " << r.canonical->vertices().size() << " vertices\n";
        for (const QVec& v : r.canonical->vertices()) std::cout << "  " << row_str(v) << "\n";
    } else {
        std::cout << "canonical hull: unbounded or undefined\n";
    }
}

void print_stringy_text(const StringyReport& r) {
    std::cout << "verdict: " << to_string(r.verdict) << "\n";
    std::cout << "translation: " << row_str(r.translation) << "\n";
    std::cout << "e_str: " << plain(r.e_str) << (r.integral ? "" : "  (not an integer, denominator " + r.denominator.get_str() + ")") << "\n";
    std::cout << "efun: (" << poly_str(r.efun.numerator()) << ") / (" << poly_str(r.efun.denominator()) << ")\n";
    std::cout << "efun polynomial: " << (r.efun_polynomial ? "yes" : "no")
              << ", symmetric: " << (r.symmetry_ok ? "yes" : "no") << "\n";
    std::cout << "face terms (face, dim, volume, cap volume, signed term):\n";
    for (const FaceTerm& t : r.terms)
        std::cout << "  " << t.face << "  " << t.dim << "  " << plain(t.volume) << "  "
                  << plain(t.cap_volume) << "  " << plain(t.term) << "\n";
}

// Cross-formula agreement for --check: every independent route to the stringy
// Euler number the verdict allows must give the same value.
void run_cross_checks(const Polytope& P, const StringyReport& r) {
    if (r.verdict == CYClass::Reflexive) {
        if (estr_reflexive(P) != r.e_str)
            throw InternalCheck("reflexive dual-volume formula disagrees with the face sum");
    }
    if (r.verdict == CYClass::Reflexive || r.verdict == CYClass::Pseudoreflexive) {
        if (estr_cond(P) != r.e_str)
            throw InternalCheck("conditional reconstruction disagrees with the face sum");
    }
}

// Recheck the fine interior data from definitions: each support direction
// must sit exactly one above its order on the interior, and the canonical
// hull must contain the input.
void recheck_fine(const Polytope& P, const FineResult& r) {
    if (r.interior_empty) return;
    for (const IVec& n : r.support) {
        Rat lo = dotq(n, r.interior_vertices[0]);
        for (const QVec& v : r.interior_vertices) lo = std::min(lo, dotq(n, v));
        if (lo != P.ord(n) + 1) throw InternalCheck("support direction is not tight");
    }
    if (r.canonical)
        for (const QVec& v : P.vertices())
            if (!r.canonical->contains(v)) throw InternalCheck("canonical hull misses a vertex");
}

int run_classify(const std::string& file, const Options& opt) {
    Polytope P = parse_polytope(read_input(file));
    ClassifyResult r = classify(P);
    if (opt.check) recheck_fine(P, r.fine);
    if (opt.json) {
        emit(render(r));
    } else {
        std::cout << "verdict: " << to_string(r.verdict) << "\n";
        if (opt.translate || r.verdict != CYClass::NoMinimalModel)
            std::cout << "translation: " << row_str(r.translation) << "\n";
        print_fine_text(r.fine);
    }
    return 0;
}

int run_fine(const std::string& file, const Options& opt) {
    Polytope P = parse_polytope(read_input(file));
    FineResult r = fine(P);
    if (opt.json)
        emit(render(r));
    else
        print_fine_text(r);
    return 0;
}

int run_dual(const std::string& file, const Options& opt) {
    Polytope P = parse_polytope(read_input(file));
    Normalized N = normalize_cy(P);
    Polytope W = mav_dual(N.polytope);
    if (opt.check) {
        ClassifyResult c = classify(P);
        if (c.verdict == CYClass::Pseudoreflexive || c.verdict == CYClass::Reflexive) {
            // The double dual is the lattice hull of the polar of W; for a
            // pseudoreflexive input it must come back to the input, which is
            // the same as every lattice point of that polar lying inside.
            for (const IVec& x : points_in(W.polar()))
                if (!N.polytope.contains(to_qvec(x)))
                    throw InternalCheck("duality is not an involution on this input");
        }
    }
    if (opt.json) {
        json j{{"schema", kReportSchema},
               {"kind", "dual"},
               {"dimension", W.ambient()},
               {"vertex_count", W.vertices().size()},
               {"vertices", [&] {
                    json a = json::array();
                    for (const QVec& v : W.vertices()) {
                        json row = json::array();
                        for (const Int& x : to_ivec(v)) row.push_back(x.get_str());
                        a.push_back(row);
                    }
                    return a;
                }()}};
        if (opt.translate) {
            json t = json::array();
            for (const Int& x : N.translation) t.push_back(x.get_str());
            j["translation"] = t;
        }
        emit(j);
    } else {
        if (opt.translate) std::cout << "# translation: " << row_str(N.translation) << "\n";
        std::cout << write_polytope(W, "dual of " + file);
    }
    return 0;
}

int run_estr(const std::string& file, const Options& opt) {
    Polytope P = parse_polytope(read_input(file));
    StringyReport r = stringy_report(P, file == "-" ? "stdin" : file);
    if (opt.check) run_cross_checks(P, r);
    if (opt.json)
        emit(render(r));
    else
        print_stringy_text(r);
    return 0;
}

int run_efun(const std::string& file, const Options& opt) {
    Polytope P = parse_polytope(read_input(file));
    Normalized N = [&] {
        try {
            return normalize_cy(P);
        } catch (const NotNormalized& e) {
            throw NotAlmostPseudoreflexive(e.what());
        }
    }();
    RationalFunctionUQ f = efun_u_normalized(N.polytope);
    if (opt.check) {
        Rat face_sum = estr_general(P);
        if (f.evaluate(1) != face_sum)
            throw InternalCheck("series limit disagrees with the face sum");
    }
    if (opt.json) {
        json j{{"schema", kReportSchema}, {"kind", "efun"}, {"efun", stringy::detail::to_json(f)},
               {"polynomial", f.is_polynomial()}};
        if (opt.translate) {
            json t = json::array();
            for (const Int& x : N.translation) t.push_back(x.get_str());
            j["translation"] = t;
        }
        emit(j);
    } else {
        if (opt.translate) std::cout << "translation: " << row_str(N.translation) << "\n";
        std::cout << "efun: (" << poly_str(f.numerator()) << ") / (" << poly_str(f.denominator())
                  << ")\n";
        std::cout << "numerator coefficients:";
        for (const Rat& c : f.numerator().coefficients()) std::cout << " " << plain(c);
        std::cout << "\ndenominator coefficients:";
        for (const Rat& c : f.denominator().coefficients()) std::cout << " " << plain(c);
        std::cout << "\npolynomial: " << (f.is_polynomial() ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_mirror(const std::string& file, const Options& opt) {
    Polytope P = parse_polytope(read_input(file));
    MirrorReport r = mirror_test(P);
    if (opt.check) {
        StringyReport sr = stringy_report(P);
        if (sr.e_str != r.e_delta) throw InternalCheck("mirror report disagrees with the face sum");
        run_cross_checks(P, sr);
    }
    if (opt.json) {
        json j = render(r);
        if (opt.translate) {
            Normalized N = normalize_cy(P);
            json t = json::array();
            for (const Int& x : N.translation) t.push_back(x.get_str());
            j["translation"] = t;
        }
        emit(j);
    } else {
        if (opt.translate)
            std::cout << "translation: " << row_str(normalize_cy(P).translation) << "\n";
        std::cout << "e_str(delta): " << plain(r.e_delta) << "\n";
        std::cout << "e_str(dual): " << plain(r.e_dual) << "\n";
        std::cout << "sign: " << r.sign << "\n";
        std::cout << "mirror relation: " << (r.pass ? "pass" : "fail") << "\n";
    }
    return 0;
}

int run_wps(long a, long b, long l, bool materialize, const Options& opt) {
    WPSParams p{a, b, l};
    WPSReport r = wps_report(p);
    std::optional<MirrorReport> mat;
    if (materialize) {
        size_t max_dim = max_materialize_dim();
        Polytope delta = wps_delta(p, max_dim);
        Polytope dual = wps_dual(p, max_dim);
        DualityPair pair = duality_pair(delta);
        if (pair.dual.vertices() != dual.vertices())
            throw InternalCheck("materialized dual disagrees with the direct construction");
        mat = mirror_test(delta);
        if (mat->e_delta != r.e_x) throw InternalCheck("materialized e_str disagrees with the closed form");
        if (mat->e_dual != r.e_dual) throw InternalCheck("materialized dual e_str disagrees with the closed form");
    }
    if (opt.json) {
        json j = render(r);
        if (mat) {
            j["materialized"] = json{{"e_x", rat_str(mat->e_delta)},
                                     {"e_dual", rat_str(mat->e_dual)},
                                     {"agrees_with_closed_form", true}};
        }
        emit(j);
    } else {
        std::cout << "weighted projective family: a=" << a << " b=" << b << " l=" << l
                  << "  (dimension " << r.dim << ")\n";
        std::cout << "e_str(X): " << plain(r.e_x) << (r.x_integral ? "" : "  (not an integer)") << "\n";
        std::cout << "e_str(X dual): " << plain(r.e_dual) << (r.dual_integral ? "" : "  (not an integer)")
                  << "\n";
        std::cout << "aggregate: " << plain(r.aggregate) << "\n";
        std::cout << "b * e_str(X) integral: " << (r.x_denominator_divides_b ? "yes" : "no") << "\n";
        std::cout << "a * e_str(X dual) integral: " << (r.dual_denominator_divides_a ? "yes" : "no") << "\n";
        std::cout << "mirror relation: " << (r.mirror_pass ? "pass" : "fail") << "\n";
        if (mat) std::cout << "materialized check: closed forms reproduced exactly\n";
    }
    return 0;
}

int run_batch(const std::string& src, const Options& opt) {
    std::vector<std::string> inputs;
    if (src == "-") {
        std::string line;
        while (std::getline(std::cin, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) inputs.push_back(line);
        }
    } else {
        std::filesystem::path dir(src);
        if (!std::filesystem::is_directory(dir)) throw ParseError("'" + src + "' is not a directory");
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".poly")
                inputs.push_back(e.path().string());
        std::sort(inputs.begin(), inputs.end());
    }
    for (const std::string& path : inputs) {
        json line;
        line["input"] = path;
        try {
            Polytope P = parse_polytope(read_input(path));
            StringyReport r = stringy_report(P, path);
            if (opt.check) run_cross_checks(P, r);
            line["ok"] = true;
            line["report"] = render(r);
        } catch (const DomainError& e) {
            line["ok"] = false;
            line["error"] = e.code();
            line["message"] = e.what();
        } catch (const ParseError& e) {
            line["ok"] = false;
            line["error"] = "ParseError";
            line["message"] = e.what();
        }
        std::cout << line.dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stringy invariants of lattice polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    bool text = false;
    app.add_flag("--text", text, "human-readable output (default)");
    app.add_flag("--translate", opt.translate, "print the normalization vector");
    app.add_flag("--check", opt.check, "run cross-formula agreement checks");

    std::string file;
    auto* c_classify = app.add_subcommand("classify", "minimal-model classification");
    c_classify->add_option("FILE", file, "polytope file ('-' for stdin)")->required();
    auto* c_fine = app.add_subcommand("fine", "fine interior, support, canonical hull");
    c_fine->add_option("FILE", file, "polytope file ('-' for stdin)")->required();
    auto* c_dual = app.add_subcommand("dual", "lattice hull of the polar, as a polytope file");
    c_dual->add_option("FILE", file, "polytope file ('-' for stdin)")->required();
    auto* c_estr = app.add_subcommand("estr", "stringy Euler number with the per-face table");
    c_estr->add_option("FILE", file, "polytope file ('-' for stdin)")->required();
    auto* c_efun = app.add_subcommand("efun", "stringy series in u as coefficient lists");
    c_efun->add_option("FILE", file, "polytope file ('-' for stdin)")->required();
    auto* c_mirror = app.add_subcommand("mirror", "stringy Euler numbers of both mirror sides");
    c_mirror->add_option("FILE", file, "polytope file ('-' for stdin)")->required();

    long wa = 0, wb = 0, wl = 0;
    bool materialize = false;
    auto* c_wps = app.add_subcommand("wps", "weighted projective hypersurface family");
    c_wps->add_option("-a", wa, "weight parameter a >= 2")->required();
    c_wps->add_option("-b", wb, "exponent parameter b >= 1")->required();
    c_wps->add_option("-l", wl, "level parameter l >= 1")->required();
    c_wps->add_flag("--materialize", materialize, "also build the polytopes and recompute");

    std::string batch_src;
    auto* c_batch = app.add_subcommand("batch", "one JSON report line per input");
    c_batch->add_option("SRC", batch_src, "directory of .poly files, or '-' for paths on stdin")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return run_classify(file, opt);
        if (c_fine->parsed()) return run_fine(file, opt);
        if (c_dual->parsed()) return run_dual(file, opt);
        if (c_estr->parsed()) return run_estr(file, opt);
        if (c_efun->parsed()) return run_efun(file, opt);
        if (c_mirror->parsed()) return run_mirror(file, opt);
        if (c_wps->parsed()) return run_wps(wa, wb, wl, materialize, opt);
        if (c_batch->parsed()) return run_batch(batch_src, opt);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
