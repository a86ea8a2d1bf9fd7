#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyckbij/bijection.hpp"
#include "dyckbij/corpus.hpp"
#include "dyckbij/involution.hpp"
#include "dyckbij/permutation.hpp"
#include "dyckbij/poset.hpp"
#include "dyckbij/verify.hpp"

using json = nlohmann::ordered_json;
using namespace dyckbij;

namespace {

constexpr int kExitMalformed = 1;
constexpr int kExitRejected = 2;

int size_cap() {
    if (const char* env = std::getenv("DYCKBIJ_MAX_N")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return kDefaultCap;
}

json profiles_json(const Permutation& sigma) {
    const MinProfile mins = ltr_minima(sigma);
    const MaxProfile maxs = rtl_maxima(sigma);
    return json{{"vmin", mins.values},
                {"pmin", mins.positions},
                {"vmax", maxs.values},
                {"pmax", maxs.positions}};
}

std::string path_str(const DyckPath& p, bool as_code) {
    return as_code ? to_code(p).str() : p.steps();
}

struct MapArgs {
    std::string perm;
    bool as_json = false;
    bool as_code = false;
};

struct UnmapArgs {
    std::string path_p, path_q;
    bool as_json = false;
};

struct PathArgs {
    std::string path;
    bool as_json = false;
    bool as_code = false;
};

struct LeqArgs {
    std::string path_p, path_q;
    bool as_json = false;
};

struct CoversArgs {
    std::string path;
    bool list = false;
    int dot_n = -1;
    bool as_json = false;
    bool as_code = false;
};

struct EnumArgs {
    int n = 0;
    std::string avoid;
    bool paths = false;
    bool as_json = false;
};

struct VerifyArgs {
    int n = 3;
    std::string suite = "all";
    int jobs = 1;
    bool as_json = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bijection toolkit between 1234-avoiding permutations and pairs of Dyck paths"};
    app.require_subcommand(1);

    MapArgs map_args;
    auto* cmd_map = app.add_subcommand("map", "Map a permutation to its pair of Dyck paths");
    cmd_map->add_option("perm", map_args.perm, "Permutation in one-line notation")->required();
    cmd_map->add_flag("--json", map_args.as_json, "Structured output");
    cmd_map->add_flag("--code", map_args.as_code, "Print paths as ascent-descent codes");

    UnmapArgs unmap_args;
    auto* cmd_unmap =
        app.add_subcommand("unmap", "Recover the 1234-avoider of an admissible pair");
    cmd_unmap->add_option("pathP", unmap_args.path_p, "First Dyck path")->required();
    cmd_unmap->add_option("pathQ", unmap_args.path_q, "Second Dyck path")->required();
    cmd_unmap->add_flag("--json", unmap_args.as_json, "Structured output");

    LeqArgs adm_args;
    auto* cmd_adm = app.add_subcommand("admissible", "Test whether a pair lies in the image");
    cmd_adm->add_option("pathP", adm_args.path_p)->required();
    cmd_adm->add_option("pathQ", adm_args.path_q)->required();
    cmd_adm->add_flag("--json", adm_args.as_json, "Structured output");

    MapArgs canon_args;
    auto* cmd_canon =
        app.add_subcommand("canon", "Canonical 1234-avoiding representative of the profile class");
    cmd_canon->add_option("perm", canon_args.perm)->required();
    cmd_canon->add_flag("--json", canon_args.as_json, "Structured output");

    PathArgs lprime_args;
    auto* cmd_lprime = app.add_subcommand("lprime", "Apply the involution L'");
    cmd_lprime->add_option("path", lprime_args.path)->required();
    cmd_lprime->add_flag("--json", lprime_args.as_json, "Structured output");
    cmd_lprime->add_flag("--code", lprime_args.as_code, "Print the result as a code");

    PathArgs krew_args;
    auto* cmd_krew = app.add_subcommand("kreweras", "Apply the Lalanne-Kreweras involution L");
    cmd_krew->add_option("path", krew_args.path)->required();
    cmd_krew->add_flag("--json", krew_args.as_json, "Structured output");
    cmd_krew->add_flag("--code", krew_args.as_code, "Print the result as a code");

    LeqArgs leq_args;
    auto* cmd_leq = app.add_subcommand("leq", "Compare two Dyck paths in the poset");
    cmd_leq->add_option("pathP", leq_args.path_p)->required();
    cmd_leq->add_option("pathQ", leq_args.path_q)->required();
    cmd_leq->add_flag("--json", leq_args.as_json, "Structured output");

    CoversArgs covers_args;
    auto* cmd_covers = app.add_subcommand("covers", "Covering moves in the Dyck-path poset");
    cmd_covers->add_option("path", covers_args.path, "Path whose upper covers to list");
    cmd_covers->add_flag("--list", covers_args.list, "List upper covers (default with a path)");
    cmd_covers->add_option("--dot", covers_args.dot_n,
                           "Emit the Hasse diagram of semilength N in DOT format");
    cmd_covers->add_flag("--json", covers_args.as_json, "Structured output");
    cmd_covers->add_flag("--code", covers_args.as_code, "Print paths as codes");

    EnumArgs enum_args;
    auto* cmd_enum = app.add_subcommand("enumerate", "Enumerate permutations or Dyck paths");
    cmd_enum->add_option("--n", enum_args.n, "Size")->required();
    cmd_enum->add_option("--avoid", enum_args.avoid, "Restrict to avoiders of 123 or 1234")
        ->check(CLI::IsMember({"123", "1234"}));
    cmd_enum->add_flag("--paths", enum_args.paths, "Enumerate Dyck paths instead");
    cmd_enum->add_flag("--json", enum_args.as_json, "One JSON object per line");

    EnumArgs count_args;
    auto* cmd_count = app.add_subcommand("count", "Count permutations or Dyck paths");
    cmd_count->add_option("--n", count_args.n, "Size")->required();
    cmd_count->add_option("--avoid", count_args.avoid, "Count avoiders of 123 or 1234")
        ->check(CLI::IsMember({"123", "1234"}));
    cmd_count->add_flag("--paths", count_args.paths, "Count Dyck paths instead");
    cmd_count->add_flag("--json", count_args.as_json, "Structured output");

    PathArgs render_args;
    auto* cmd_render = app.add_subcommand("render", "ASCII picture of a Dyck path");
    cmd_render->add_option("path", render_args.path)->required();

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "Run the exhaustive property suites");
    cmd_verify->add_option("--n", verify_args.n, "Largest size to sweep")->required();
    cmd_verify->add_option("--suite", verify_args.suite, "Suite selector (default: all)");
    cmd_verify->add_option("--jobs", verify_args.jobs,
                           "Worker threads (>1 runs the OpenMP kernels)");
    cmd_verify->add_flag("--json", verify_args.as_json, "Structured output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_map) {
            const Permutation sigma = Permutation::parse(map_args.perm);
            const PathPair pair = nu(sigma);
            if (map_args.as_json) {
                std::cout << json{{"perm", sigma.str()},
                                  {"pathP", pair.first.steps()},
                                  {"pathQ", pair.second.steps()},
                                  {"codes",
                                   {{"P", to_code(pair.first).str()},
                                    {"Q", to_code(pair.second).str()}}},
                                  {"profiles", profiles_json(sigma)}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << path_str(pair.first, map_args.as_code) << '\n'
                          << path_str(pair.second, map_args.as_code) << '\n';
            }
        } else if (*cmd_unmap) {
            const PathPair pair{DyckPath::parse(unmap_args.path_p),
                                DyckPath::parse(unmap_args.path_q)};
            if (pair.first.semilength() != pair.second.semilength() || !is_admissible(pair)) {
                std::cerr << "not admissible\n";
                return kExitRejected;
            }
            const Permutation alpha = nu_inv(pair);
            if (unmap_args.as_json) {
                std::cout << json{{"perm", alpha.str()},
                                  {"pathP", pair.first.steps()},
                                  {"pathQ", pair.second.steps()},
                                  {"codes",
                                   {{"P", to_code(pair.first).str()},
                                    {"Q", to_code(pair.second).str()}}},
                                  {"profiles", profiles_json(alpha)},
                                  {"sigma", lambda_inv_123(pair.first).str()},
                                  {"tau", mu_inv_123(pair.second).str()}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << alpha.str() << '\n';
            }
        } else if (*cmd_adm) {
            const PathPair pair{DyckPath::parse(adm_args.path_p), DyckPath::parse(adm_args.path_q)};
            const bool adm =
                pair.first.semilength() == pair.second.semilength() && is_admissible(pair);
            if (adm_args.as_json)
                std::cout << json{{"pathP", pair.first.steps()},
                                  {"pathQ", pair.second.steps()},
                                  {"admissible", adm}}
                                 .dump()
                          << '\n';
            else
                std::cout << (adm ? "yes" : "no") << '\n';
            return adm ? 0 : kExitRejected;
        } else if (*cmd_canon) {
            const Permutation sigma = Permutation::parse(canon_args.perm);
            const Permutation canon = canonical_representative(sigma);
            if (canon_args.as_json)
                std::cout << json{{"perm", canon.str()}, {"profiles", profiles_json(canon)}}.dump()
                          << '\n';
            else
                std::cout << canon.str() << '\n';
        } else if (*cmd_lprime || *cmd_krew) {
            const PathArgs& args = *cmd_lprime ? lprime_args : krew_args;
            const DyckPath in = DyckPath::parse(args.path);
            const DyckPath out = *cmd_lprime ? lprime(in) : kreweras(in);
            if (args.as_json)
                std::cout << json{{"path", out.steps()}, {"code", to_code(out).str()}}.dump()
                          << '\n';
            else
                std::cout << path_str(out, args.as_code) << '\n';
        } else if (*cmd_leq) {
            const DyckPath p = DyckPath::parse(leq_args.path_p);
            const DyckPath q = DyckPath::parse(leq_args.path_q);
            const bool le = leq(p, q);
            if (leq_args.as_json)
                std::cout << json{{"pathP", p.steps()}, {"pathQ", q.steps()}, {"leq", le}}.dump()
                          << '\n';
            else
                std::cout << (le ? "yes" : "no") << '\n';
            return le ? 0 : kExitRejected;
        } else if (*cmd_covers) {
            if (covers_args.dot_n >= 0) {
                if (covers_args.dot_n > size_cap()) {
                    std::cerr << "covers: --dot size exceeds cap\n";
                    return kExitMalformed;
                }
                std::cout << hasse_dot(all_dyck_paths(covers_args.dot_n, size_cap()));
            } else if (!covers_args.path.empty()) {
                const DyckPath p = DyckPath::parse(covers_args.path);
                const std::vector<DyckPath> ups = upper_covers(p);
                if (covers_args.as_json) {
                    json arr = json::array();
                    for (const DyckPath& u : ups) arr.push_back(u.steps());
                    std::cout << json{{"path", p.steps()}, {"covers", arr}}.dump() << '\n';
                } else {
                    for (const DyckPath& u : ups)
                        std::cout << path_str(u, covers_args.as_code) << '\n';
                }
            } else {
                std::cerr << "covers: need a path or --dot N\n";
                return kExitMalformed;
            }
        } else if (*cmd_enum) {
            if (enum_args.paths) {
                for_each_dyck_path(enum_args.n, [&](const DyckPath& p) {
                    if (enum_args.as_json)
                        std::cout << json{{"path", p.steps()}}.dump() << '\n';
                    else
                        std::cout << p.steps() << '\n';
                }, size_cap());
            } else {
                auto emit = [&](const Permutation& s) {
                    if (enum_args.as_json)
                        std::cout << json{{"perm", s.str()}}.dump() << '\n';
                    else
                        std::cout << s.str() << '\n';
                };
                if (enum_args.avoid.empty())
                    for_each_permutation(enum_args.n, emit, size_cap());
                else
                    for_each_avoiding(enum_args.n, static_cast<int>(enum_args.avoid.size()), emit,
                                      size_cap());
            }
        } else if (*cmd_count) {
            std::uint64_t count = 0;
            if (count_args.paths) {
                for_each_dyck_path(count_args.n, [&count](const DyckPath&) { ++count; },
                                   size_cap());
            } else if (count_args.avoid.empty()) {
                for_each_permutation(count_args.n, [&count](const Permutation&) { ++count; },
                                     size_cap());
            } else {
                count = count_avoiding(count_args.n, static_cast<int>(count_args.avoid.size()),
                                       size_cap());
            }
            if (count_args.as_json)
                std::cout << json{{"n", count_args.n}, {"count", count}}.dump() << '\n';
            else
                std::cout << count << '\n';
        } else if (*cmd_render) {
            std::cout << render_ascii(DyckPath::parse(render_args.path));
        } else if (*cmd_verify) {
            const std::vector<verify::CheckResult> results =
                verify::run_suite(verify_args.suite, verify_args.n, verify_args.jobs, size_cap());
            bool all_pass = true;
            if (verify_args.as_json) {
                json arr = json::array();
                for (const auto& r : results) {
                    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                    all_pass = all_pass && r.pass;
                }
                std::cout << arr.dump() << '\n';
            } else {
                for (const auto& r : results) {
                    std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.detail
                              << '\n';
                    all_pass = all_pass && r.pass;
                }
            }
            return all_pass ? 0 : kExitRejected;
        }
    } catch (const NotAdmissibleError& e) {
        std::cerr << e.what() << '\n';
        return kExitRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    return 0;
}
