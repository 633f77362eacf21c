#include "cli.hpp"

#include "latgeo/enumerate.hpp"
#include "latgeo/gso.hpp"
#include "latgeo/lattice.hpp"
#include "latgeo/minima.hpp"
#include "latgeo/numtheory.hpp"
#include "latgeo/packing.hpp"
#include "latgeo/voronoi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

namespace latgeo::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- input parsing ---------------------------------------------------------

Rat parse_scalar(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::int64_t parse_int64(const std::string& text) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(text, &pos);
        if (pos != text.size())
            throw UsageError("malformed integer '" + text + "'");
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("malformed integer '" + text + "'");
    }
}

std::vector<RatVec> parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::vector<RatVec> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        RatVec row;
        std::string tok;
        while (ls >> tok)
            row.push_back(parse_scalar(tok));
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw UsageError("no vectors in '" + path + "'");
    return rows;
}

RatVec parse_vector_arg(const std::string& text) {
    RatVec out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ','))
        out.push_back(parse_scalar(tok));
    if (out.empty())
        throw UsageError("empty vector argument");
    return out;
}

std::array<std::int64_t, 4> parse_quad(const std::string& text) {
    std::array<std::int64_t, 4> out{};
    std::string tok;
    std::istringstream in(text);
    int i = 0;
    while (std::getline(in, tok, ',')) {
        if (i >= 4)
            throw UsageError("expected exactly 4 comma-separated integers");
        out[static_cast<std::size_t>(i++)] = parse_int64(tok);
    }
    if (i != 4)
        throw UsageError("expected exactly 4 comma-separated integers");
    return out;
}

// ---- report building -------------------------------------------------------

Json rat_json(const Rat& q) {
    return rat_str(q);
}

Json float_json(double x) {
    return fmt_double(x);
}

Json rat_with_shadow(const Rat& q) {
    Json j = Json::object();
    j["exact"] = rat_str(q);
    j["float"] = fmt_double(rat_d(q));
    return j;
}

Json vec_json(const RatVec& v) {
    Json arr = Json::array();
    for (const Rat& q : v)
        arr.push_back(rat_str(q));
    return arr;
}

Json ivec_json(const IntVec& v) {
    Json arr = Json::array();
    for (const Int& q : v)
        arr.push_back(int_str(q));
    return arr;
}

Json mat_json(const std::vector<RatVec>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows)
        arr.push_back(vec_json(r));
    return arr;
}

Json imat_json(const IntMat& rows) {
    Json arr = Json::array();
    for (const auto& r : rows)
        arr.push_back(ivec_json(r));
    return arr;
}

Json exact_sqrt_json(const ExactSqrt& e) {
    Json j = Json::object();
    j["sign"] = e.sign;
    j["square"] = rat_str(e.square);
    j["value"] = fmt_double(e.value());
    return j;
}

Json verdict_json(const BoundCheck& c) {
    Json j = Json::object();
    j["inequality"] = c.name;
    j["relation"] = c.relation;
    j["lhs"] = fmt_double(c.lhs);
    j["rhs"] = fmt_double(c.rhs);
    j["holds"] = c.exact_verdict;
    return j;
}

void print_pretty(const Json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                out << pad << key << ":\n";
                print_pretty(value, out, indent + 1);
            } else {
                out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object()) {
                out << pad << "-\n";
                print_pretty(value, out, indent + 1);
            } else if (value.is_array()) {
                out << pad << "- " << value.dump() << "\n";
            } else {
                out << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

// ---- subcommand handlers ---------------------------------------------------

struct Options {
    std::string basis_file;
    std::string second_file;
    std::string points_file;
    std::string norm = "l2";
    std::string count_radius;
    std::string point_arg;
    std::string below_arg;
    std::string alpha_arg;
    std::string ball_arg;
    std::string euler_a, euler_b;
    std::int64_t scalar_n = 0;
    std::int64_t scalar_q = 0;
    int grid = 0;
    std::uint64_t budget = kDefaultEnumBudget;
    bool pretty = false;
};

Norm parse_norm(const std::string& name) {
    if (name == "l2")
        return Norm::L2;
    if (name == "linf")
        return Norm::Linf;
    throw UsageError("--norm must be l2 or linf");
}

Json cmd_det(const Options& opt) {
    auto rows = parse_matrix_file(opt.basis_file);
    auto L = make_lattice(rows);
    Json inputs = Json::object();
    inputs["basis_file"] = opt.basis_file;
    inputs["basis"] = mat_json(L.rows());
    Json results = Json::object();
    results["rank"] = L.rank();
    results["ambient_dim"] = L.ambient_dim();
    results["complete"] = L.complete();
    results["det_sq"] = rat_json(determinant_squared(L));
    results["det"] = float_json(std::sqrt(rat_d(L.det_squared())));
    if (!opt.second_file.empty()) {
        auto other = make_lattice(parse_matrix_file(opt.second_file));
        inputs["other_file"] = opt.second_file;
        inputs["other"] = mat_json(other.rows());
        auto sl = same_lattice(L, other);
        Json j = Json::object();
        j["same"] = sl.same;
        if (sl.witness)
            j["witness"] = imat_json(sl.witness->matrix);
        results["same_lattice"] = j;
    }
    if (!opt.count_radius.empty()) {
        Rat radius = parse_scalar(opt.count_radius);
        inputs["count_radius"] = rat_str(radius);
        auto pc = point_count_ratio(L, radius);
        Json j = Json::object();
        j["count"] = pc.count;
        j["ball_volume"] = float_json(pc.ball_volume);
        j["ratio"] = float_json(pc.ratio);
        results["point_count"] = j;
    }
    Json rep = Json::object();
    rep["command"] = "det";
    rep["inputs"] = inputs;
    rep["results"] = results;
    return rep;
}

Json cmd_gso(const Options& opt) {
    auto L = make_lattice(parse_matrix_file(opt.basis_file));
    auto g = gram_schmidt(L);
    Json results = Json::object();
    results["tilde"] = mat_json(g.tilde);
    results["mu"] = mat_json(g.mu);
    Json norms = Json::array();
    for (const Rat& b : g.tilde_norms_sq)
        norms.push_back(rat_str(b));
    results["tilde_norms_sq"] = norms;
    auto tri = gso_triangular(L);
    Json tri_json = Json::array();
    for (const auto& row : tri) {
        Json r = Json::array();
        for (const auto& e : row)
            r.push_back(exact_sqrt_json(e));
        tri_json.push_back(r);
    }
    results["triangular"] = tri_json;
    results["min_norm_sq"] = rat_json(gso_min_norm_sq(L));
    Json rep = Json::object();
    rep["command"] = "gso";
    rep["inputs"] = Json::object({{"basis_file", opt.basis_file}, {"basis", mat_json(L.rows())}});
    rep["results"] = results;
    return rep;
}

Json cmd_svp(const Options& opt) {
    auto L = make_lattice(parse_matrix_file(opt.basis_file));
    Norm norm = parse_norm(opt.norm);
    Json inputs = Json::object();
    inputs["basis_file"] = opt.basis_file;
    inputs["basis"] = mat_json(L.rows());
    inputs["norm"] = opt.norm;
    Json results = Json::object();
    if (!opt.below_arg.empty()) {
        Rat r_sq = parse_scalar(opt.below_arg);
        inputs["below_sq"] = rat_str(r_sq);
        auto vecs = enumerate_below(L, r_sq, norm, opt.budget);
        Json arr = Json::array();
        for (const auto& c : vecs) {
            RatVec img = L.image(c);
            Json e = Json::object();
            e["coeffs"] = ivec_json(c);
            e["vector"] = vec_json(img);
            e["norm_sq"] = rat_str(norm == Norm::L2 ? norm_sq(img) : linf_norm_sq(img));
            arr.push_back(e);
        }
        results["count"] = static_cast<std::int64_t>(vecs.size());
        results["vectors"] = arr;
    } else {
        auto sv = shortest_vector(L, norm, opt.budget);
        results["lambda1_sq"] = rat_json(sv.lambda1_sq);
        results["lambda1"] = float_json(std::sqrt(rat_d(sv.lambda1_sq)));
        results["coeffs"] = ivec_json(sv.coeffs);
        results["vector"] = vec_json(sv.vector);
    }
    Json rep = Json::object();
    rep["command"] = "svp";
    rep["inputs"] = inputs;
    rep["results"] = results;
    return rep;
}

Json cmd_minima(const Options& opt) {
    auto L = make_lattice(parse_matrix_file(opt.basis_file));
    auto m = successive_minima(L, opt.budget);
    Json results = Json::object();
    Json lam = Json::array(), lamf = Json::array(), wit = Json::array(), witv = Json::array();
    for (std::size_t i = 0; i < m.lambda_sq.size(); ++i) {
        lam.push_back(rat_str(m.lambda_sq[i]));
        lamf.push_back(fmt_double(std::sqrt(rat_d(m.lambda_sq[i]))));
        wit.push_back(ivec_json(m.witnesses[i]));
        witv.push_back(vec_json(L.image(m.witnesses[i])));
    }
    results["lambda_sq"] = lam;
    results["lambda"] = lamf;
    results["witness_coeffs"] = wit;
    results["witness_vectors"] = witv;
    Json rep = Json::object();
    rep["command"] = "minima";
    rep["inputs"] = Json::object({{"basis_file", opt.basis_file}, {"basis", mat_json(L.rows())}});
    rep["results"] = results;
    return rep;
}

Json cmd_bounds(const Options& opt) {
    auto L = make_lattice(parse_matrix_file(opt.basis_file));
    auto rep_data = bounds_report(L, opt.budget);
    Json results = Json::object();
    Json lam = Json::array();
    for (const Rat& l : rep_data.lambda_sq)
        lam.push_back(rat_str(l));
    results["lambda_sq"] = lam;
    results["lambda1_linf_sq"] = rat_json(rep_data.lambda1_linf_sq);
    results["det_sq"] = rat_json(rep_data.det_sq);
    results["gso_min_sq"] = rat_json(rep_data.gso_min_sq);
    results["sharp_lower_discrepancy"] = rep_data.sharp_lower_discrepancy;
    Json verdicts = Json::array();
    for (const auto& c : rep_data.checks)
        verdicts.push_back(verdict_json(c));
    Json rep = Json::object();
    rep["command"] = "bounds";
    rep["inputs"] = Json::object({{"basis_file", opt.basis_file}, {"basis", mat_json(L.rows())}});
    rep["results"] = results;
    rep["verdicts"] = verdicts;
    return rep;
}

Json cmd_hermite(const Options& opt) {
    int n = static_cast<int>(opt.scalar_n);
    auto hb = hermite_bounds(n);
    Json results = Json::object();
    results["n"] = n;
    if (hb.exact_gamma_n_pow_n) {
        results["exact_gamma_n_pow_n"] = rat_str(*hb.exact_gamma_n_pow_n);
        results["exact_gamma_n"] = float_json(std::pow(rat_d(*hb.exact_gamma_n_pow_n), 1.0 / n));
    } else {
        results["exact_gamma_n_pow_n"] = nullptr;
        results["exact_gamma_n"] = nullptr;
    }
    results["blichfeldt_upper"] = float_json(hb.blichfeldt_upper);
    results["kitaoka_upper"] = float_json(hb.kitaoka_upper);
    results["asymptotic_lower"] = float_json(hb.asymptotic_lower);
    results["asymptotic_upper"] = float_json(hb.asymptotic_upper);
    results["asymptotic_lower_log_refined"] = float_json(hb.asymptotic_lower_log_refined);
    results["approx"] = float_json(hb.approx);
    Json rep = Json::object();
    rep["command"] = "hermite";
    rep["inputs"] = Json::object({{"n", n}});
    rep["results"] = results;
    return rep;
}

Json cmd_density(const Options& opt) {
    Json inputs = Json::object();
    Json results = Json::object();
    if (!opt.ball_arg.empty()) {
        auto parts = parse_vector_arg(opt.ball_arg);
        if (parts.size() != 2 || !is_integral(parts[0]))
            throw UsageError("--ball expects D,R with integer D");
        int d = static_cast<int>(parts[0].get_num().get_si());
        double radius = rat_d(parts[1]);
        inputs["ball"] = Json::object({{"dimension", d}, {"radius", fmt_double(radius)}});
        results["ball_volume"] = float_json(ball_volume(d, radius));
    } else {
        if (opt.basis_file.empty())
            throw UsageError("density needs a basis file or --ball D,R");
        auto L = make_lattice(parse_matrix_file(opt.basis_file));
        inputs["basis_file"] = opt.basis_file;
        inputs["basis"] = mat_json(L.rows());
        results["packing_density"] = float_json(packing_density(L));
        results["hermite_invariant"] = float_json(hermite_invariant(L));
    }
    Json rep = Json::object();
    rep["command"] = "density";
    rep["inputs"] = inputs;
    rep["results"] = results;
    return rep;
}

Json cmd_hlawka(const Options& opt) {
    int n = static_cast<int>(opt.scalar_n);
    double bound = minkowski_hlawka_bound(n);
    Json results = Json::object();
    results["n"] = n;
    results["bound"] = float_json(bound);
    results["zeta_n"] = float_json(bound * std::pow(2.0, n - 1));
    Json rep = Json::object();
    rep["command"] = "hlawka";
    rep["inputs"] = Json::object({{"n", n}});
    rep["results"] = results;
    return rep;
}

Json cmd_voronoi(const Options& opt) {
    auto L = make_lattice(parse_matrix_file(opt.basis_file));
    Json inputs = Json::object();
    inputs["basis_file"] = opt.basis_file;
    inputs["basis"] = mat_json(L.rows());
    auto rv = relevant_vectors(L, opt.budget);
    Json arr = Json::array();
    for (const auto& v : rv.vectors) {
        Json e = Json::object();
        e["coeffs"] = ivec_json(v.coeffs);
        e["vector"] = vec_json(v.vector);
        e["norm_sq"] = rat_str(v.norm_sq);
        Json coset = Json::array();
        for (int b : v.coset)
            coset.push_back(b);
        e["coset"] = coset;
        arr.push_back(e);
    }
    Json results = Json::object();
    results["relevant"] = arr;
    results["count_with_signs"] = static_cast<std::int64_t>(2 * rv.vectors.size());
    if (!opt.point_arg.empty()) {
        RatVec x = parse_vector_arg(opt.point_arg);
        inputs["point"] = vec_json(x);
        results["in_voronoi_cell"] = in_voronoi_cell(x, L, opt.budget);
    }
    Json rep = Json::object();
    rep["command"] = "voronoi";
    rep["inputs"] = inputs;
    rep["results"] = results;
    return rep;
}

Json cmd_radii(const Options& opt) {
    auto L = make_lattice(parse_matrix_file(opt.basis_file));
    Json inputs = Json::object();
    inputs["basis_file"] = opt.basis_file;
    inputs["basis"] = mat_json(L.rows());
    std::optional<int> grid;
    if (opt.grid > 0) {
        grid = opt.grid;
        inputs["grid"] = opt.grid;
    }
    auto rr = radius_report(L, grid, opt.budget);
    Json results = Json::object();
    results["packing_radius_sq"] = rat_json(rr.packing_radius_sq);
    results["packing_radius"] = float_json(std::sqrt(rat_d(rr.packing_radius_sq)));
    results["covering_lower_sq"] = rat_json(rr.covering_lower_sq);
    results["covering_lower"] = float_json(std::sqrt(rat_d(rr.covering_lower_sq)));
    results["covering_lower_volumetric_sq"] = float_json(rr.covering_lower_volumetric_sq);
    results["covering_upper_sq"] = rat_json(rr.covering_upper_sq);
    results["covering_upper"] = float_json(std::sqrt(rat_d(rr.covering_upper_sq)));
    if (rr.covering_estimate)
        results["covering_estimate"] = float_json(*rr.covering_estimate);
    Json rep = Json::object();
    rep["command"] = "radii";
    rep["inputs"] = inputs;
    rep["results"] = results;
    return rep;
}

Json cmd_two_squares(const Options& opt) {
    auto ts = two_squares(opt.scalar_n);
    Json results = Json::object();
    results["p"] = ts.p;
    results["sqrt_minus_one"] = ts.q;
    results["a"] = ts.a;
    results["b"] = ts.b;
    Json rep = Json::object();
    rep["command"] = "two-squares";
    rep["inputs"] = Json::object({{"p", ts.p}});
    rep["results"] = results;
    return rep;
}

Json cmd_four_squares(const Options& opt) {
    Json inputs = Json::object();
    Json results = Json::object();
    if (!opt.euler_a.empty() || !opt.euler_b.empty()) {
        if (opt.euler_a.empty() || opt.euler_b.empty())
            throw UsageError("--euler needs both quadruples");
        auto a = parse_quad(opt.euler_a);
        auto b = parse_quad(opt.euler_b);
        auto z = euler_four_square_product(a, b);
        auto arr = [](const std::array<std::int64_t, 4>& q) {
            Json j = Json::array();
            for (auto v : q)
                j.push_back(v);
            return j;
        };
        inputs["a"] = arr(a);
        inputs["b"] = arr(b);
        results["product_parts"] = arr(z);
        std::int64_t total = 0;
        for (auto v : z)
            total += v * v;
        results["product_value"] = total;
    } else {
        std::int64_t x = opt.scalar_n;
        inputs["x"] = x;
        auto fs = four_squares(x);
        Json parts = Json::array();
        for (auto v : fs.parts)
            parts.push_back(v);
        results["parts"] = parts;
        bool prime_path = x > 2 && is_prime(x);
        results["prime_path"] = prime_path;
        if (prime_path) {
            auto [y, z] = yz_witness(x);
            results["witness"] = Json::object({{"y", y}, {"z", z}});
        }
    }
    Json rep = Json::object();
    rep["command"] = "four-squares";
    rep["inputs"] = inputs;
    rep["results"] = results;
    return rep;
}

Json cmd_approx(const Options& opt) {
    Rat alpha = parse_scalar(opt.alpha_arg);
    auto ap = dirichlet_approx(alpha, opt.scalar_q);
    Json results = Json::object();
    results["p"] = int_str(ap.p);
    results["q"] = ap.q;
    Rat err = alpha - Rat(ap.p) / Rat(ap.q);
    if (err < 0)
        err = -err;
    results["error"] = rat_with_shadow(err);
    results["bound"] = rat_with_shadow(Rat(1, static_cast<unsigned long>(ap.Q)));
    Json rep = Json::object();
    rep["command"] = "approx";
    rep["inputs"] = Json::object({{"alpha", rat_str(alpha)}, {"Q", ap.Q}});
    rep["results"] = results;
    return rep;
}

Json cmd_collide(const Options& opt) {
    auto points = parse_matrix_file(opt.points_file);
    auto L = make_lattice(parse_matrix_file(opt.basis_file));
    Json inputs = Json::object();
    inputs["points_file"] = opt.points_file;
    inputs["points"] = mat_json(points);
    inputs["basis_file"] = opt.basis_file;
    inputs["basis"] = mat_json(L.rows());
    Json reductions = Json::array();
    for (const auto& p : points) {
        auto mp = reduce_mod_mesh(p, L);
        Json e = Json::object();
        e["point"] = vec_json(p);
        e["reduced"] = vec_json(mp.reduced);
        e["offset"] = ivec_json(mp.offset);
        reductions.push_back(e);
    }
    Json results = Json::object();
    results["reductions"] = reductions;
    auto pair = blichfeldt_collision(points, L);
    if (pair) {
        results["collision"] = Json::object({{"i", pair->first}, {"j", pair->second}});
    } else {
        results["collision"] = nullptr;
    }
    Json rep = Json::object();
    rep["command"] = "collide";
    rep["inputs"] = inputs;
    rep["results"] = results;
    return rep;
}

constexpr OpMapping kDispatch[] = {
    {"make_lattice", "det"},
    {"determinant_squared", "det"},
    {"same_lattice", "det"},
    {"point_count_ratio", "det"},
    {"reduce_mod_mesh", "collide"},
    {"blichfeldt_collision", "collide"},
    {"gram_schmidt", "gso"},
    {"gso_triangular", "gso"},
    {"gso_min_norm_sq", "gso"},
    {"enumerate_below", "svp"},
    {"shortest_vector", "svp"},
    {"successive_minima", "minima"},
    {"bounds_report", "bounds"},
    {"ball_volume", "density"},
    {"packing_density", "density"},
    {"hermite_invariant", "density"},
    {"hermite_exact", "hermite"},
    {"hermite_bounds", "hermite"},
    {"minkowski_hlawka_bound", "hlawka"},
    {"relevant_vectors", "voronoi"},
    {"in_voronoi_cell", "voronoi"},
    {"radius_report", "radii"},
    {"covering_radius_estimate", "radii"},
    {"sqrt_minus_one_mod_p", "two-squares"},
    {"two_squares", "two-squares"},
    {"dirichlet_approx", "approx"},
    {"euler_four_square_product", "four-squares"},
    {"yz_witness", "four-squares"},
    {"four_squares", "four-squares"},
};

} // namespace

std::span<const OpMapping> operation_dispatch_table() {
    return kDispatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact geometry-of-numbers toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--pretty", opt.pretty, "human-readable output");
    app.add_option("--enum-budget", opt.budget, "enumeration node budget");

    auto* det = app.add_subcommand("det", "lattice determinant and basis checks");
    det->add_option("basis", opt.basis_file, "basis file")->required();
    det->add_option("--same", opt.second_file, "second basis file to compare");
    det->add_option("--count-radius", opt.count_radius, "count lattice points within this radius");

    auto* gso = app.add_subcommand("gso", "exact orthogonalization data");
    gso->add_option("basis", opt.basis_file)->required();

    auto* svp = app.add_subcommand("svp", "shortest nonzero vector");
    svp->add_option("basis", opt.basis_file)->required();
    svp->add_option("--norm", opt.norm, "l2 or linf");
    svp->add_option("--below", opt.below_arg, "list all vectors with squared norm <= this");

    auto* minima = app.add_subcommand("minima", "successive minima with witnesses");
    minima->add_option("basis", opt.basis_file)->required();

    auto* bounds = app.add_subcommand("bounds", "inequality verdicts");
    bounds->add_option("basis", opt.basis_file)->required();

    auto* hermite = app.add_subcommand("hermite", "Hermite constant table and bounds");
    hermite->add_option("n", opt.scalar_n)->required();

    auto* density = app.add_subcommand("density", "packing density and Hermite invariant");
    density->add_option("basis", opt.basis_file);
    density->add_option("--ball", opt.ball_arg, "D,R: volume of the d-ball of radius R");

    auto* hlawka = app.add_subcommand("hlawka", "lattice packing density bound");
    hlawka->add_option("n", opt.scalar_n)->required();

    auto* voronoi = app.add_subcommand("voronoi", "relevant vectors");
    voronoi->add_option("basis", opt.basis_file)->required();
    voronoi->add_option("--point", opt.point_arg, "test cell membership of this point");

    auto* radii = app.add_subcommand("radii", "packing and covering radii");
    radii->add_option("basis", opt.basis_file)->required();
    radii->add_option("--grid", opt.grid, "grid resolution for the covering estimate");

    auto* two_sq = app.add_subcommand("two-squares", "prime as a sum of two squares");
    two_sq->add_option("p", opt.scalar_n)->required();

    auto* four_sq = app.add_subcommand("four-squares", "integer as a sum of four squares");
    four_sq->add_option("x", opt.scalar_n);
    four_sq->add_option("--euler", opt.euler_a, "first quadruple a1,a2,a3,a4");
    four_sq->add_option("--with", opt.euler_b, "second quadruple b1,b2,b3,b4");

    auto* approx = app.add_subcommand("approx", "bounded-denominator rational approximation");
    approx->add_option("alpha", opt.alpha_arg)->required();
    approx->add_option("Q", opt.scalar_q)->required();

    auto* collide = app.add_subcommand("collide", "mesh reduction collisions");
    collide->add_option("points", opt.points_file, "points file")->required();
    collide->add_option("basis", opt.basis_file, "basis file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << "usage: latgeo [--pretty] [--enum-budget N] <subcommand> ...\n";
        return 2;
    }

    std::string command;
    try {
        Json rep;
        if (det->parsed()) {
            command = "det";
            rep = cmd_det(opt);
        } else if (gso->parsed()) {
            command = "gso";
            rep = cmd_gso(opt);
        } else if (svp->parsed()) {
            command = "svp";
            rep = cmd_svp(opt);
        } else if (minima->parsed()) {
            command = "minima";
            rep = cmd_minima(opt);
        } else if (bounds->parsed()) {
            command = "bounds";
            rep = cmd_bounds(opt);
        } else if (hermite->parsed()) {
            command = "hermite";
            rep = cmd_hermite(opt);
        } else if (density->parsed()) {
            command = "density";
            rep = cmd_density(opt);
        } else if (hlawka->parsed()) {
            command = "hlawka";
            rep = cmd_hlawka(opt);
        } else if (voronoi->parsed()) {
            command = "voronoi";
            rep = cmd_voronoi(opt);
        } else if (radii->parsed()) {
            command = "radii";
            rep = cmd_radii(opt);
        } else if (two_sq->parsed()) {
            command = "two-squares";
            rep = cmd_two_squares(opt);
        } else if (four_sq->parsed()) {
            command = "four-squares";
            if (opt.euler_a.empty() && opt.euler_b.empty() && opt.scalar_n == 0)
                throw UsageError("four-squares needs x or --euler/--with");
            rep = cmd_four_squares(opt);
        } else if (approx->parsed()) {
            command = "approx";
            rep = cmd_approx(opt);
        } else if (collide->parsed()) {
            command = "collide";
            rep = cmd_collide(opt);
        }
        if (opt.pretty)
            print_pretty(rep, out, 0);
        else
            out << rep.dump(2) << "\n";
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const LatticeError& e) {
        Json rep = Json::object();
        rep["command"] = command;
        rep["error"] = e.code();
        rep["message"] = e.what();
        if (opt.pretty)
            print_pretty(rep, out, 0);
        else
            out << rep.dump(2) << "\n";
        err << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace latgeo::cli
