#include "symsphere/cli.hpp"

#include "symsphere/catalog.hpp"
#include "symsphere/classical.hpp"
#include "symsphere/errors.hpp"
#include "symsphere/extremal.hpp"
#include "symsphere/geometric.hpp"
#include "symsphere/io.hpp"
#include "symsphere/lmg.hpp"
#include "symsphere/slocc.hpp"
#include "symsphere/symstate.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace symsphere {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string jpoint(const BlochPoint& p) {
    return "{\"theta\":" + json_number(p.theta) + ",\"phi\":" + json_number(p.phi) + "}";
}

std::string jpoints(const std::vector<BlochPoint>& pts) {
    std::string out = "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            out += ",";
        out += jpoint(pts[i]);
    }
    return out + "]";
}

std::string jdicke(const SymmetricState& s) {
    std::string out = "[";
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (k)
            out += ",";
        out += "[" + json_number(s.coeffs[k].real()) + "," + json_number(s.coeffs[k].imag()) + "]";
    }
    return out + "]";
}

std::string jints(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

void print_points(std::ostream& out, const std::vector<BlochPoint>& pts) {
    for (const auto& p : pts)
        out << "  " << json_number(p.theta) << " " << json_number(p.phi) << "\n";
}

void print_dicke(std::ostream& out, const SymmetricState& s) {
    for (const auto& c : s.coeffs)
        out << "  " << json_number(c.real()) << " " << json_number(c.imag()) << "\n";
}

// Shared tail of reports that carry a closest-product-point set.
std::string jcpps(const CppReport& rep) {
    return "\"cpps\":" + jpoints(rep.cpps) +
           ",\"continuous_ring\":" + jbool(rep.continuous_ring) +
           ",\"ring_theta\":" + json_number(rep.ring_theta) +
           ",\"g_max\":" + json_number(rep.g_max) + ",\"e_g\":" + json_number(rep.e_g);
}

void print_cpps(std::ostream& out, const CppReport& rep) {
    if (rep.continuous_ring) {
        out << "closest product points: full circle of latitude at theta = "
            << json_number(rep.ring_theta) << "\n";
    } else {
        out << "closest product points (theta, phi):\n";
        print_points(out, rep.cpps);
    }
    out << "g_max: " << json_number(rep.g_max) << "\n";
    out << "e_g: " << json_number(rep.e_g) << "\n";
}

void cmd_analyze(const std::string& path, double grid_deg, bool json, std::ostream& out) {
    const SymmetricState s = normalize(load_state_file(path));
    const MPDistribution mps = state_to_mps(s);
    const DCClass dc = dc_class(mps);
    const CppReport rep = find_cpps(s, grid_deg);
    const double integral = integral_check(s);
    const double volume = volume_check(s);
    const int n = s.n();
    const double integral_expected = 4.0 * kPi / (n + 1);
    const double volume_expected = integral_expected / 3.0;

    if (json) {
        std::string clusters = "[";
        for (std::size_t i = 0; i < mps.clusters.size(); ++i) {
            if (i)
                clusters += ",";
            clusters += "{\"theta\":" + json_number(mps.clusters[i].center.theta) +
                        ",\"phi\":" + json_number(mps.clusters[i].center.phi) +
                        ",\"multiplicity\":" + std::to_string(mps.clusters[i].multiplicity) + "}";
        }
        clusters += "]";
        out << "{\"n\":" << n << ",\"dicke\":" << jdicke(s) << ",\"mps\":" << jpoints(mps.points)
            << ",\"clusters\":" << clusters << ",\"dc_class\":" << jints(dc.partition) << ","
            << jcpps(rep) << ",\"integral\":{\"value\":" << json_number(integral)
            << ",\"expected\":" << json_number(integral_expected)
            << "},\"volume\":{\"value\":" << json_number(volume)
            << ",\"expected\":" << json_number(volume_expected) << "}}\n";
        return;
    }

    out << "n: " << n << "\n";
    out << "dicke coefficients (re, im):\n";
    print_dicke(out, s);
    out << "majorana points (theta, phi):\n";
    print_points(out, mps.points);
    out << "degeneracy class:";
    for (int m : dc.partition)
        out << " " << m;
    out << "\n";
    print_cpps(out, rep);
    out << "integral of g^2: " << json_number(integral) << " (expected "
        << json_number(integral_expected) << ")\n";
    out << "volume integral: " << json_number(volume) << " (expected "
        << json_number(volume_expected) << ")\n";
}

void cmd_equiv(const std::string& path_a, const std::string& path_b, const std::string& relation,
               double tol, bool json, std::ostream& out) {
    const SymmetricState a = normalize(load_state_file(path_a));
    const SymmetricState b = normalize(load_state_file(path_b));
    const EquivalenceVerdict v =
        relation == "lu" ? lu_equivalence(a, b, tol) : slocc_equivalence(a, b, tol);

    if (json) {
        std::string witness = "null";
        if (v.witness) {
            const Mat2& w = *v.witness;
            witness = "[[" + json_number(w.a.real()) + "," + json_number(w.a.imag()) + "],[" +
                      json_number(w.b.real()) + "," + json_number(w.b.imag()) + "],[" +
                      json_number(w.c.real()) + "," + json_number(w.c.imag()) + "],[" +
                      json_number(w.d.real()) + "," + json_number(w.d.imag()) + "]]";
        }
        out << "{\"relation\":" << jstr(relation_name(v.relation))
            << ",\"detail\":" << jstr(v.detail) << ",\"witness\":" << witness << "}\n";
        return;
    }

    out << "relation: " << relation_name(v.relation) << "\n";
    if (!v.detail.empty())
        out << "detail: " << v.detail << "\n";
    if (v.witness) {
        const Mat2& w = *v.witness;
        out << "witness (row-major re, im):\n";
        out << "  " << json_number(w.a.real()) << " " << json_number(w.a.imag()) << "   "
            << json_number(w.b.real()) << " " << json_number(w.b.imag()) << "\n";
        out << "  " << json_number(w.c.real()) << " " << json_number(w.c.imag()) << "   "
            << json_number(w.d.real()) << " " << json_number(w.d.imag()) << "\n";
    }
}

void cmd_catalog_list(bool json, std::ostream& out) {
    const std::vector<std::string> names = catalog_names();
    if (json) {
        std::string arr = "[";
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i)
                arr += ",";
            arr += jstr(names[i]);
        }
        arr += "]";
        out << "{\"names\":" << arr << "}\n";
        return;
    }
    for (const auto& name : names)
        out << name << "\n";
}

void cmd_catalog_show(const std::string& name, std::optional<int> n, bool json,
                      std::ostream& out) {
    const CatalogEntry e = named_state(name, n);

    if (json) {
        out << "{\"name\":" << jstr(e.name) << ",\"parameters\":" << jstr(e.parameters)
            << ",\"n\":" << e.n << ",\"dicke\":" << jdicke(e.state)
            << ",\"e_g_reference\":" << json_number(e.e_g_reference)
            << ",\"e_g_exact\":" << jbool(e.e_g_exact) << ",\"cpp_count\":" << e.cpp_count
            << ",\"cpp_ring\":" << jbool(e.cpp_ring)
            << ",\"cpp_description\":" << jstr(e.cpp_description)
            << ",\"positive\":" << jbool(e.positive)
            << ",\"invariance_group\":" << jstr(e.invariance_group)
            << ",\"solves_toth\":" << jbool(e.solves_toth)
            << ",\"solves_thomson\":" << jbool(e.solves_thomson)
            << ",\"solves_majorana\":" << jbool(e.solves_majorana) << ",\"note\":" << jstr(e.note)
            << ",\"reference_cpps\":" << jpoints(e.reference_cpps)
            << ",\"reference_dc\":" << jints(e.reference_dc) << "}\n";
        return;
    }

    out << "name: " << e.name << "\n";
    if (!e.parameters.empty())
        out << "parameters: " << e.parameters << "\n";
    out << "n: " << e.n << "\n";
    out << "e_g: " << json_number(e.e_g_reference) << (e.e_g_exact ? " (exact)" : " (truncated)")
        << "\n";
    if (e.cpp_count > 0)
        out << "cpp count: " << e.cpp_count << "\n";
    if (e.cpp_ring)
        out << "cpp ring: yes\n";
    if (!e.cpp_description.empty())
        out << "cpps: " << e.cpp_description << "\n";
    out << "positive: " << (e.positive ? "yes" : "no") << "\n";
    if (!e.invariance_group.empty())
        out << "invariance group: " << e.invariance_group << "\n";
    std::string solves;
    if (e.solves_toth)
        solves += " toth";
    if (e.solves_thomson)
        solves += " thomson";
    if (e.solves_majorana)
        solves += " majorana";
    if (!solves.empty())
        out << "solves:" << solves << "\n";
    if (!e.note.empty())
        out << "note: " << e.note << "\n";
    out << "dicke coefficients (re, im):\n";
    print_dicke(out, e.state);
    if (!e.reference_cpps.empty()) {
        out << "reference cpps (theta, phi):\n";
        print_points(out, e.reference_cpps);
    }
    if (!e.reference_dc.empty()) {
        out << "reference degeneracy class:";
        for (int m : e.reference_dc)
            out << " " << m;
        out << "\n";
    }
}

void cmd_search(int n, const std::string& family, int m, int k1, int k2, int restarts,
                std::uint64_t seed, bool json, std::ostream& out) {
    SearchAnsatz ansatz;
    ansatz.n = n;
    ansatz.m = m;
    ansatz.k1 = k1;
    ansatz.k2 = k2;
    ansatz.restarts = restarts;
    ansatz.seed = seed;
    if (family == "general")
        ansatz.family = AnsatzFamily::General;
    else if (family == "rotational")
        ansatz.family = AnsatzFamily::Rotational;
    else if (family == "two_dicke")
        ansatz.family = AnsatzFamily::TwoDicke;
    else
        ansatz.family = AnsatzFamily::Positive;

    const SearchResult res = search_max_entangled(ansatz);

    if (json) {
        out << "{\"family\":" << jstr(family) << ",\"n\":" << n << ",\"m\":" << m
            << ",\"k1\":" << k1 << ",\"k2\":" << k2 << ",\"restarts\":" << res.restarts_run
            << ",\"seed\":" << seed << ",\"dicke\":" << jdicke(res.best) << "," << jcpps(res.report)
            << ",\"best_restart\":" << res.best_restart << ",\"evaluations\":" << res.evaluations
            << ",\"iterations\":" << res.iterations << "}\n";
        return;
    }

    out << "family: " << family << "\n";
    out << "n: " << n << "\n";
    out << "restarts: " << res.restarts_run << " (seed " << seed << ", best restart "
        << res.best_restart << ")\n";
    out << "dicke coefficients (re, im):\n";
    print_dicke(out, res.best);
    print_cpps(out, res.report);
    out << "evaluations: " << res.evaluations << "\n";
}

void cmd_classical(const std::string& problem, int n, int restarts, std::uint64_t seed, bool json,
                   std::ostream& out) {
    const PointSet ps = problem == "thomson" ? optimize_thomson(n, restarts, seed)
                                             : optimize_toth(n, restarts, seed);
    const double energy = thomson_energy(ps);
    const std::vector<double> dists = pairwise_distances(ps);
    const double min_dist = dists.empty() ? 0.0 : dists.front();
    const double e_g = entanglement(pointset_to_state(ps));

    if (json) {
        std::string pts = "[";
        for (std::size_t i = 0; i < ps.points.size(); ++i) {
            if (i)
                pts += ",";
            pts += "[" + json_number(ps.points[i][0]) + "," + json_number(ps.points[i][1]) + "," +
                   json_number(ps.points[i][2]) + "]";
        }
        pts += "]";
        out << "{\"problem\":" << jstr(problem) << ",\"n\":" << n << ",\"restarts\":" << restarts
            << ",\"seed\":" << seed << ",\"points\":" << pts
            << ",\"energy\":" << json_number(energy) << ",\"min_distance\":" << json_number(min_dist)
            << ",\"e_g\":" << json_number(e_g) << "}\n";
        return;
    }

    out << "problem: " << problem << "\n";
    out << "n: " << n << "\n";
    out << "points (x, y, z):\n";
    for (const auto& p : ps.points)
        out << "  " << json_number(p[0]) << " " << json_number(p[1]) << " " << json_number(p[2])
            << "\n";
    out << "coulomb energy: " << json_number(energy) << "\n";
    out << "min pairwise distance: " << json_number(min_dist) << "\n";
    out << "e_g of the associated state: " << json_number(e_g) << "\n";
}

void cmd_lmg(double spin, double h, double gamma, bool json, std::ostream& out) {
    const long long two_s = std::llround(2.0 * spin);
    if (std::fabs(2.0 * spin - static_cast<double>(two_s)) > 1e-9 || two_s < 1)
        throw OutOfRange("spin must be a positive integer or half-integer");
    if (two_s > 60)
        throw OutOfRange("spin is limited to 30 (60 qubits)");

    LmgParams params;
    params.two_s = static_cast<int>(two_s);
    params.gamma = gamma;
    params.h = h;
    const SymmetricState g = ground_state(params);
    const MPDistribution mps = state_to_mps(g);
    const CppReport rep = find_cpps(g);
    const double latitude = cpp_latitude(h);

    if (json) {
        out << "{\"two_s\":" << two_s << ",\"n\":" << g.n() << ",\"gamma\":" << json_number(gamma)
            << ",\"h\":" << json_number(h) << ",\"dicke\":" << jdicke(g)
            << ",\"mps\":" << jpoints(mps.points) << "," << jcpps(rep)
            << ",\"cpp_latitude\":" << json_number(latitude) << "}\n";
        return;
    }

    out << "two_s: " << two_s << " (n = " << g.n() << " qubits)\n";
    out << "gamma: " << json_number(gamma) << ", h: " << json_number(h) << "\n";
    out << "dicke coefficients (re, im):\n";
    print_dicke(out, g);
    out << "majorana points (theta, phi):\n";
    print_points(out, mps.points);
    print_cpps(out, rep);
    out << "large-spin cpp latitude: " << json_number(latitude) << "\n";
}

void cmd_sample(const std::string& path, const std::string& function,
                const std::string& resolution, const std::string& out_path, std::ostream& out) {
    int theta_res = 0, phi_res = 0;
    char trail = 0;
    if (std::sscanf(resolution.c_str(), "%dx%d%c", &theta_res, &phi_res, &trail) != 2 ||
        theta_res < 2 || phi_res < 2 || theta_res > 16384 || phi_res > 16384)
        throw OutOfRange("resolution must look like 64x128 with both sizes in [2, 16384]");

    const SymmetricState s = normalize(load_state_file(path));
    const SampleFunction f =
        function == "vol" ? SampleFunction::Volume : SampleFunction::Amplitude2;
    const SphereSamples samples = sample_sphere(s, f, theta_res, phi_res);

    std::ofstream csv(out_path, std::ios::binary);
    if (!csv)
        throw OutOfRange("cannot open output file: " + out_path);
    csv << "theta,phi,value\n";
    for (int i = 0; i < theta_res; ++i)
        for (int j = 0; j < phi_res; ++j)
            csv << json_number(samples.thetas[i]) << "," << json_number(samples.phis[j]) << ","
                << json_number(samples.values[static_cast<std::size_t>(i) * phi_res + j]) << "\n";
    if (!csv)
        throw OutOfRange("failed writing output file: " + out_path);

    out << "wrote " << theta_res * phi_res << " samples (" << theta_res << "x" << phi_res
        << ") to " << out_path << "\n";
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for permutation-symmetric multiqubit states"};
    app.name("symsphere");
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "Majorana points, degeneracy class, closest product points and E_g");
    std::string an_state;
    double an_grid = 1.0;
    bool an_json = false;
    analyze->add_option("--state", an_state, "state JSON file")->required();
    analyze->add_option("--grid-deg", an_grid, "search grid spacing in degrees")
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--json", an_json, "machine-readable output");

    auto* equiv = app.add_subcommand("equiv", "test two states for LU or SLOCC equivalence");
    std::string eq_a, eq_b, eq_rel = "slocc";
    double eq_tol = 1e-6;
    bool eq_json = false;
    equiv->add_option("--a", eq_a, "first state JSON file")->required();
    equiv->add_option("--b", eq_b, "second state JSON file")->required();
    equiv->add_option("--relation", eq_rel, "relation to test")
        ->check(CLI::IsMember({"slocc", "lu"}));
    equiv->add_option("--tol", eq_tol, "match tolerance")->check(CLI::PositiveNumber);
    equiv->add_flag("--json", eq_json, "machine-readable output");

    auto* catalog = app.add_subcommand("catalog", "reference state catalog");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list catalog names");
    bool cl_json = false;
    cat_list->add_flag("--json", cl_json, "machine-readable output");
    auto* cat_show = catalog->add_subcommand("show", "show one catalog entry");
    std::string cs_name;
    int cs_n = 0;
    bool cs_json = false;
    cat_show->add_option("name", cs_name, "entry name, parameters embeddable as name(args)")
        ->required();
    auto* cs_n_opt = cat_show->add_option("--n", cs_n, "qubit count for parametric families")
        ->check(CLI::Range(1, 60));
    cat_show->add_flag("--json", cs_json, "machine-readable output");

    auto* search = app.add_subcommand("search", "multistart search for maximally entangled states");
    int se_n = 4;
    std::string se_family = "positive";
    int se_m = 2, se_k1 = 0, se_k2 = 1, se_restarts = 20;
    std::uint64_t se_seed = 0;
    bool se_json = false;
    search->add_option("--n", se_n, "qubit count")->required()->check(CLI::Range(2, 60));
    search->add_option("--family", se_family, "ansatz family")
        ->required()
        ->check(CLI::IsMember({"positive", "general", "rotational", "two_dicke"}));
    search->add_option("--m", se_m, "rotational symmetry order")->check(CLI::Range(1, 60));
    search->add_option("--k1", se_k1, "first Dicke index (two_dicke family)")
        ->check(CLI::Range(0, 60));
    search->add_option("--k2", se_k2, "second Dicke index (two_dicke family)")
        ->check(CLI::Range(0, 60));
    search->add_option("--restarts", se_restarts, "independent restarts")
        ->check(CLI::Range(1, 100000));
    search->add_option("--seed", se_seed, "random seed");
    search->add_flag("--json", se_json, "machine-readable output");

    auto* classical = app.add_subcommand("classical", "spherical point optimizers");
    std::string cp_problem;
    int cp_n = 4, cp_restarts = 50;
    std::uint64_t cp_seed = 0;
    bool cp_json = false;
    classical->add_option("--problem", cp_problem, "objective")
        ->required()
        ->check(CLI::IsMember({"thomson", "toth"}));
    classical->add_option("--n", cp_n, "point count")->required()->check(CLI::Range(2, 60));
    classical->add_option("--restarts", cp_restarts, "independent restarts")
        ->check(CLI::Range(1, 100000));
    classical->add_option("--seed", cp_seed, "random seed");
    classical->add_flag("--json", cp_json, "machine-readable output");

    auto* lmg = app.add_subcommand("lmg", "uniaxial collective-spin ground states");
    double lm_spin = 1.0, lm_h = 0.0, lm_gamma = 1.0;
    bool lm_json = false;
    // The field strength option is spelled --h, so this subcommand keeps only
    // the long help flag.
    lmg->set_help_flag("--help", "print help");
    lmg->add_option("--spin", lm_spin, "total spin, integer or half-integer")->required();
    lmg->add_option("--h", lm_h, "transverse field, >= 0")->required();
    lmg->add_option("--gamma", lm_gamma, "coupling, > 0")->check(CLI::PositiveNumber);
    lmg->add_flag("--json", lm_json, "machine-readable output");

    auto* sample = app.add_subcommand("sample", "tabulate a spherical function to CSV");
    std::string sa_state, sa_function, sa_resolution, sa_out;
    sample->add_option("--state", sa_state, "state JSON file")->required();
    sample->add_option("--function", sa_function, "amp2: product overlap squared, vol: MP volume")
        ->required()
        ->check(CLI::IsMember({"amp2", "vol"}));
    sample->add_option("--resolution", sa_resolution, "grid size as THETAxPHI, e.g. 64x128")
        ->required();
    sample->add_option("--out", sa_out, "output CSV path")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed())
            cmd_analyze(an_state, an_grid, an_json, out);
        else if (equiv->parsed())
            cmd_equiv(eq_a, eq_b, eq_rel, eq_tol, eq_json, out);
        else if (cat_list->parsed())
            cmd_catalog_list(cl_json, out);
        else if (cat_show->parsed())
            cmd_catalog_show(cs_name, cs_n_opt->count() ? std::optional<int>(cs_n) : std::nullopt,
                             cs_json, out);
        else if (search->parsed())
            cmd_search(se_n, se_family, se_m, se_k1, se_k2, se_restarts, se_seed, se_json, out);
        else if (classical->parsed())
            cmd_classical(cp_problem, cp_n, cp_restarts, cp_seed, cp_json, out);
        else if (lmg->parsed())
            cmd_lmg(lm_spin, lm_h, lm_gamma, lm_json, out);
        else if (sample->parsed())
            cmd_sample(sa_state, sa_function, sa_resolution, sa_out, out);
        return 0;
    } catch (const RootFindingFailed& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const ZeroState& e) {
        err << "zero state: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace symsphere
