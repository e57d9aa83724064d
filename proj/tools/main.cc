// Copyright 2026 The cliffdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffdual/capi.h"
#include "json.hpp"

namespace {

constexpr int EXIT_PASS = 0;
constexpr int EXIT_USAGE = 1;
constexpr int EXIT_FALSIFIED = 2;

struct Globals {
    bool json = false;
    std::string cache;
    std::string repro_dir = ".";
    std::vector<std::string> argv;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text << "\n";
}

bool all_scalars(const nlohmann::json &v);
bool is_matrix(const nlohmann::json &v);

std::string scalar_text(const nlohmann::json &v) {
    if (v.is_array() && all_scalars(v)) {
        std::string joined;
        for (const auto &x : v) {
            joined += (joined.empty() ? "" : " ") + scalar_text(x);
        }
        return joined.empty() ? "-" : joined;
    }
    if (is_matrix(v)) {
        std::string joined;
        for (const auto &row : v) {
            joined += (joined.empty() ? "" : "; ") + scalar_text(row);
        }
        return joined;
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "yes" : "no";
    }
    std::string s = v.dump();
    if (s.size() > 72) {
        s = s.substr(0, 69) + "...";
    }
    return s;
}

bool all_scalars(const nlohmann::json &v) {
    for (const auto &x : v) {
        if (x.is_structured()) {
            return false;
        }
    }
    return true;
}

bool is_matrix(const nlohmann::json &v) {
    if (!v.is_array() || v.empty()) {
        return false;
    }
    for (const auto &row : v) {
        if (!row.is_array() || !all_scalars(row)) {
            return false;
        }
    }
    return true;
}

void print_rows(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &rows, const std::string &indent) {
    size_t w = 0;
    for (const auto &[k, v] : rows) {
        w = std::max(w, k.size());
    }
    for (const auto &[k, v] : rows) {
        out << indent << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    }
}

// Array of objects as a column table over their scalar fields.
void print_records(std::ostream &out, const nlohmann::json &records, const std::string &indent) {
    std::vector<std::string> cols;
    for (const auto &rec : records) {
        for (const auto &[k, v] : rec.items()) {
            bool flat = !v.is_structured() || (v.is_array() && all_scalars(v));
            if (flat && std::find(cols.begin(), cols.end(), k) == cols.end()) {
                cols.push_back(k);
            }
        }
    }
    if (cols.empty()) {
        for (const auto &rec : records) {
            out << indent << scalar_text(rec) << "\n";
        }
        return;
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width;
    for (const auto &c : cols) {
        width.push_back(c.size());
    }
    for (const auto &rec : records) {
        std::vector<std::string> row;
        for (size_t i = 0; i < cols.size(); i++) {
            row.push_back(rec.contains(cols[i]) ? scalar_text(rec[cols[i]]) : "-");
            width[i] = std::max(width[i], row.back().size());
        }
        cells.push_back(row);
    }
    auto line = [&](const std::vector<std::string> &row) {
        out << indent;
        for (size_t i = 0; i < row.size(); i++) {
            out << row[i] << (i + 1 < row.size() ? std::string(width[i] - row[i].size() + 2, ' ') : "");
        }
        out << "\n";
    };
    line(cols);
    for (const auto &row : cells) {
        line(row);
    }
}

void print_object(std::ostream &out, const nlohmann::json &obj, const std::string &indent) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::vector<std::pair<std::string, const nlohmann::json *>> nested;
    for (const auto &[k, v] : obj.items()) {
        if (!v.is_structured() || (v.is_array() && all_scalars(v)) || is_matrix(v)) {
            rows.emplace_back(k, scalar_text(v));
        } else {
            nested.emplace_back(k, &v);
        }
    }
    print_rows(out, rows, indent);
    for (const auto &[k, v] : nested) {
        out << indent << k << ":\n";
        if (v->is_object()) {
            print_object(out, *v, indent + "  ");
            continue;
        }
        bool objects = true;
        for (const auto &x : *v) {
            objects = objects && x.is_object();
        }
        if (objects && v->size() <= 64) {
            print_records(out, *v, indent + "  ");
        } else {
            out << indent << "  (" << v->size() << " entries)\n";
        }
    }
}

void render_table(std::ostream &out, const nlohmann::json &report) {
    out << "cliffdual " << report.value("version", "") << "  " << report.value("command", "");
    for (const auto &[k, v] : report["config"].items()) {
        if (!v.is_structured()) {
            out << "  " << k << "=" << scalar_text(v);
        }
    }
    out << "\n\n";
    print_object(out, report["result"], "");
    out << "\npassed: " << (report.value("passed", false) ? "yes" : "NO") << "\n";
}

class Runner {
   public:
    explicit Runner(const Globals &g) : g_(g) {
    }
    ~Runner() {
        cd_context_free(ctx_);
    }

    cd_context *ctx() {
        if (ctx_ == nullptr) {
            check(cd_context_new(g_.cache.empty() ? nullptr : g_.cache.c_str(), &ctx_));
        }
        return ctx_;
    }

    void check(cd_status st) {
        if (st != CD_OK) {
            std::string msg = ctx_ == nullptr ? "" : cd_context_last_error(ctx_);
            throw UsageError(std::string(cd_status_string(st)) + (msg.empty() ? "" : ": " + msg));
        }
    }

    // Runs a command, renders its report and maps the outcome to an exit code.
    int report(const std::function<cd_status(cd_result **)> &fn, const std::string &out_path = "",
               const nlohmann::json &inputs = nlohmann::json::object()) {
        cd_result *res = nullptr;
        check(fn(&res));
        std::string text = cd_result_json(res);
        bool passed = cd_result_passed(res) != 0;
        cd_result_free(res);
        return finish(text, passed, out_path, inputs);
    }

    int finish(const std::string &text, bool passed, const std::string &out_path, const nlohmann::json &inputs) {
        nlohmann::json rep = nlohmann::json::parse(text);
        if (g_.json) {
            std::cout << text << "\n";
        } else {
            render_table(std::cout, rep);
        }
        if (!out_path.empty()) {
            write_file(out_path, text);
        }
        if (passed) {
            return EXIT_PASS;
        }
        std::string name = rep.value("command", "report");
        std::replace(name.begin(), name.end(), ' ', '-');
        std::string bundle = g_.repro_dir + "/cliffdual-repro-" + name + ".json";
        nlohmann::json b = {{"format", "cliffdual.repro"}, {"argv", g_.argv}, {"inputs", inputs}, {"report", rep}};
        write_file(bundle, b.dump(2));
        std::cerr << "falsification: reproduction bundle written to " << bundle << "\n";
        return EXIT_FALSIFIED;
    }

   private:
    const Globals &g_;
    cd_context *ctx_ = nullptr;
};

struct RSD {
    size_t r = 0;
    size_t s = 0;
    int d = 2;
};

void add_rsd(CLI::App *cmd, RSD &v, bool r_required = true) {
    auto *r = cmd->add_option("--r", v.r, "number of +1 signs in q_{r,s}");
    if (r_required) {
        r->required();
    }
    cmd->add_option("--s", v.s, "number of -1 signs in q_{r,s}")->capture_default_str();
    cmd->add_option("--d", v.d, "prime local dimension")->capture_default_str();
}

}  // namespace

int main(int argc, char **argv) {
    Globals g;
    for (int i = 1; i < argc; i++) {
        g.argv.emplace_back(argv[i]);
    }
    CLI::App app{"Exact toolkit for Clifford tensor powers, their commutants and dualities"};
    app.set_version_flag("--version", std::string(cd_version()));
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "print the JSON report instead of a table");
    app.add_option("--cache", g.cache, "cache directory for groups and Grassmannians (CLIFFDUAL_CACHE overrides)");
    app.add_option("--repro-dir", g.repro_dir, "directory for reproduction bundles")->capture_default_str();

    Runner run(g);
    std::function<int()> action;

    // forms classify
    auto *forms = app.add_subcommand("forms", "quadratic and bilinear forms")->require_subcommand(1);
    auto *classify = forms->add_subcommand("classify", "invariants of q_{r,s}, a Gram matrix or a form file");
    RSD fc;
    std::string gram;
    std::string gen_quad;
    add_rsd(classify, fc, false);
    auto *opt_gram = classify->add_option("--gram", gram, "symmetric Gram rows, e.g. \"011;101;110\"");
    auto *opt_gq = classify->add_option("--gen-quad", gen_quad, "form JSON file {\"d\",\"D\",\"diag\",\"polar\"}")->check(CLI::ExistingFile);
    opt_gram->excludes(opt_gq);
    classify->callback([&] {
        action = [&] {
            if (!gen_quad.empty()) {
                std::string text = read_file(gen_quad);
                return run.report([&](cd_result **o) { return cd_forms_classify_form(run.ctx(), text.c_str(), o); }, "",
                                  {{"form", nlohmann::json::parse(text, nullptr, false)}});
            }
            if (!gram.empty()) {
                return run.report([&](cd_result **o) { return cd_forms_classify_gram(run.ctx(), fc.d, gram.c_str(), o); });
            }
            if (fc.r + fc.s == 0) {
                throw UsageError("forms classify needs --r/--s, --gram or --gen-quad");
            }
            return run.report([&](cd_result **o) { return cd_forms_classify(run.ctx(), fc.r, fc.s, fc.d, o); });
        };
    });

    // iso enum
    auto *iso = app.add_subcommand("iso", "stochastic isotropic subspaces")->require_subcommand(1);
    auto *iso_enum = iso->add_subcommand("enum", "enumerate Gr_m and Gr_m^0");
    RSD ie;
    size_t m = 1;
    std::string stratum = "both";
    add_rsd(iso_enum, ie);
    iso_enum->add_option("--m", m, "subspace dimension")->capture_default_str();
    iso_enum->add_option("--stratum", stratum, "gr, gr0 or both")->check(CLI::IsMember({"gr", "gr0", "both"}))->capture_default_str();
    iso_enum->callback([&] {
        action = [&] { return run.report([&](cd_result **o) { return cd_iso_enum(run.ctx(), ie.r, ie.s, ie.d, m, stratum.c_str(), o); }); };
    });

    // group enum
    auto *group = app.add_subcommand("group", "stochastic orthogonal groups")->require_subcommand(1);
    auto *group_enum = group->add_subcommand("enum", "enumerate O_1(T)");
    RSD ge;
    bool characters = false;
    bool stats = false;
    add_rsd(group_enum, ge);
    group_enum->add_flag("--characters", characters, "compute the character table");
    group_enum->add_flag("--stats", stats, "conjugacy class census and element orders");
    group_enum->callback([&] {
        action = [&] {
            return run.report([&](cd_result **o) { return cd_group_enum(run.ctx(), ge.r, ge.s, ge.d, characters, stats, o); });
        };
    });

    // commutant gram|verify
    auto *commutant = app.add_subcommand("commutant", "the semigroup S_{r,s}")->require_subcommand(1);
    auto *cgram = commutant->add_subcommand("gram", "rank of the Gram matrix of S_{r,s}");
    RSD cg;
    size_t cg_n = 1;
    std::string cg_out;
    add_rsd(cgram, cg);
    cgram->add_option("--n", cg_n, "tensor power")->required();
    cgram->add_option("--out", cg_out, "write the JSON report here");
    cgram->callback([&] {
        action = [&] {
            return run.report([&](cd_result **o) { return cd_commutant_gram(run.ctx(), cg.r, cg.s, cg.d, cg_n, o); }, cg_out);
        };
    });
    auto *cverify = commutant->add_subcommand("verify", "commutation and closure suite");
    RSD cv;
    size_t cv_t = 0;
    size_t cv_n = 1;
    std::string cv_out;
    add_rsd(cverify, cv, false);
    auto *opt_t = cverify->add_option("--t", cv_t, "shorthand for --r t --s 0");
    cverify->add_option("--n", cv_n, "tensor power")->required();
    cverify->add_option("--out", cv_out, "write the JSON report here");
    opt_t->excludes(cverify->get_option("--r"));
    cverify->callback([&] {
        action = [&] {
            if (cv_t > 0) {
                cv.r = cv_t;
                cv.s = 0;
            }
            if (cv.r + cv.s == 0) {
                throw UsageError("commutant verify needs --t or --r/--s");
            }
            return run.report([&](cd_result **o) { return cd_commutant_verify(run.ctx(), cv.r, cv.s, cv.d, cv_n, o); }, cv_out);
        };
    });

    // decompose t5|stab|real
    auto *decompose = app.add_subcommand("decompose", "isotypic decompositions")->require_subcommand(1);
    auto *t5 = decompose->add_subcommand("t5", "the five-copy qubit decomposition");
    size_t t5_n = 3;
    bool no_float = false;
    size_t vectors = 2;
    uint64_t t5_seed = 1;
    double t5_tol = 1e-9;
    std::string t5_out;
    t5->add_option("--n", t5_n, "number of qubits")->capture_default_str();
    t5->add_option("--report,--out", t5_out, "write the JSON report here");
    t5->add_flag("--no-float", no_float, "skip the floating projector checks");
    t5->add_option("--vectors", vectors, "random test vectors for float checks")->capture_default_str();
    t5->add_option("--seed", t5_seed, "random seed")->capture_default_str();
    t5->add_option("--tol", t5_tol, "float tolerance")->capture_default_str();
    t5->callback([&] {
        action = [&] {
            return run.report([&](cd_result **o) { return cd_decompose_t5(run.ctx(), t5_n, !no_float, vectors, t5_seed, t5_tol, o); },
                              t5_out);
        };
    });
    auto *stab = decompose->add_subcommand("stab", "compression to stabilizer tensor powers");
    RSD ds;
    size_t ds_n = 2;
    std::string ds_out;
    add_rsd(stab, ds);
    stab->add_option("--n", ds_n, "tensor power")->capture_default_str();
    stab->add_option("--out", ds_out, "write the JSON report here");
    stab->callback([&] {
        action = [&] {
            return run.report([&](cd_result **o) { return cd_decompose_stab(run.ctx(), ds.r, ds.s, ds.d, ds_n, o); }, ds_out);
        };
    });
    auto *real = decompose->add_subcommand("real", "real-Clifford Weyl basis suite");
    size_t dr_n = 1;
    size_t dr_t = 4;
    std::string dr_out;
    real->add_option("--n", dr_n, "number of qubits")->capture_default_str();
    real->add_option("--t", dr_t, "tensor power, a multiple of 4")->capture_default_str();
    real->add_option("--out", dr_out, "write the JSON report here");
    real->callback([&] {
        action = [&] { return run.report([&](cd_result **o) { return cd_decompose_real(run.ctx(), dr_n, dr_t, o); }, dr_out); };
    });

    // conjugate plan|verify
    auto *conjugate = app.add_subcommand("conjugate", "black-box complex conjugation")->require_subcommand(1);
    auto *plan_cmd = conjugate->add_subcommand("plan", "build the code and encoder");
    int cp_d = 2;
    size_t cp_n = 1;
    std::string cp_out;
    plan_cmd->add_option("--d", cp_d, "prime local dimension")->capture_default_str();
    plan_cmd->add_option("--n", cp_n, "number of qudits")->capture_default_str();
    plan_cmd->add_option("--out", cp_out, "write the plan report here");
    plan_cmd->callback([&] {
        action = [&] {
            cd_plan *p = nullptr;
            run.check(cd_plan_build(run.ctx(), cp_d, cp_n, &p));
            std::unique_ptr<cd_plan, void (*)(cd_plan *)> guard(p, cd_plan_free);
            std::string text = cd_plan_json(p);
            return run.finish(text, nlohmann::json::parse(text).value("passed", false), cp_out, nlohmann::json::object());
        };
    });
    auto *verify = conjugate->add_subcommand("verify", "check U^{(x)t} conjugated by the encoder is conj(U)");
    std::string plan_path;
    std::string words_path;
    size_t random_count = 0;
    size_t length = 16;
    uint64_t cv_seed = 1;
    std::string backend = "exact";
    double cv_tol = 1e-9;
    std::string vf_out;
    verify->add_option("--plan", plan_path, "plan JSON from 'conjugate plan --out'")->required()->check(CLI::ExistingFile);
    auto *opt_words = verify->add_option("--words", words_path, "Clifford words, one per line")->check(CLI::ExistingFile);
    auto *opt_random = verify->add_option("--random", random_count, "number of random words");
    verify->add_option("--length", length, "random word length")->capture_default_str();
    verify->add_option("--seed", cv_seed, "random seed")->capture_default_str();
    verify->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    verify->add_option("--tol", cv_tol, "float tolerance")->capture_default_str();
    verify->add_option("--out", vf_out, "write the JSON report here");
    opt_words->excludes(opt_random);
    verify->callback([&] {
        action = [&] {
            if (words_path.empty() && random_count == 0) {
                throw UsageError("conjugate verify needs --words or --random");
            }
            std::string plan_text = read_file(plan_path);
            cd_plan *p = nullptr;
            run.check(cd_plan_from_json(run.ctx(), plan_text.c_str(), &p));
            std::unique_ptr<cd_plan, void (*)(cd_plan *)> guard(p, cd_plan_free);
            nlohmann::json inputs = {{"plan", nlohmann::json::parse(cd_plan_json(p))}};
            if (!words_path.empty()) {
                std::string words = read_file(words_path);
                inputs["words"] = words;
                return run.report(
                    [&](cd_result **o) { return cd_conjugate_verify(run.ctx(), p, words.c_str(), backend.c_str(), cv_tol, o); }, vf_out,
                    inputs);
            }
            inputs["random"] = {{"count", random_count}, {"length", length}, {"seed", cv_seed}};
            return run.report(
                [&](cd_result **o) {
                    return cd_conjugate_verify_random(run.ctx(), p, random_count, length, cv_seed, backend.c_str(), cv_tol, o);
                },
                vf_out, inputs);
        };
    });

    // selftest
    auto *selftest = app.add_subcommand("selftest", "quick checks of every module");
    std::string suite = "all";
    std::string suites = cd_selftest_suites();
    std::vector<std::string> suite_names;
    for (size_t start = 0; start <= suites.size();) {
        size_t end = suites.find(',', start);
        end = end == std::string::npos ? suites.size() : end;
        suite_names.push_back(suites.substr(start, end - start));
        start = end + 1;
    }
    selftest->add_option("--suite", suite, "module name or all")->check(CLI::IsMember(suite_names))->capture_default_str();
    selftest->callback([&] {
        action = [&] { return run.report([&](cd_result **o) { return cd_selftest(run.ctx(), suite.c_str(), o); }); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_PASS : EXIT_USAGE;
    }
    try {
        return action();
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}
