#include "zsr/cli.hpp"

#include <functional>
#include <memory>

#include <CLI11.hpp>

#include "zsr/complexes.hpp"
#include "zsr/error.hpp"
#include "zsr/fractional.hpp"
#include "zsr/hypergraphs.hpp"
#include "zsr/io.hpp"
#include "zsr/suites.hpp"
#include "zsr/topology.hpp"
#include "zsr/zerosum.hpp"

namespace zsr::cli {
namespace {

using io::Json;

struct Globals {
    std::uint64_t seed = 0;
    std::size_t jobs = 0;
    bool json = false;
    bool normalize = false;
};

FiniteGroup group_arg(const std::string& s) {
    if (s.size() > 5 && s.substr(s.size() - 5) == ".json") return io::parse_group(io::read_file(s));
    return io::parse_group_name(s);
}

std::vector<Element> elements(const std::vector<long>& raw, std::size_t order, const char* what) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) throw InputError(std::string(what) + "[" + std::to_string(i + 1) + "] is negative");
        if (static_cast<std::size_t>(raw[i]) >= order)
            throw InputError(std::string(what) + "[" + std::to_string(i + 1) + "] = " + std::to_string(raw[i]) +
                             " is not an element of a group of order " + std::to_string(order));
        out.push_back(static_cast<Element>(raw[i]));
    }
    return out;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out;
    for (auto x : v) out.push_back(x + 1);
    return out;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

private:
    void emit(const Json& j) { out_ << (g_.json ? j.dump() : j.dump(2)) << "\n"; }
    void zerosum(CLI::App& app);
    void hyper(CLI::App& app);
    void complex(CLI::App& app);
    void topo(CLI::App& app);
    void frac(CLI::App& app);
    void verify(CLI::App& app);

    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    std::function<int()> action_;

    // option storage
    std::size_t n_ = 0, m_ = 0;
    std::vector<long> seq_, d_, coloring_, gl_, hl_;
    std::string group_, file_, file2_, scale_ = "small";
    bool flag_ = false;
    long target_ = -1;
    int sphere_dim_ = 0;
    std::vector<std::string> suites_;
};

void Runner::zerosum(CLI::App& app) {
    auto* z = app.add_subcommand("zerosum", "zero-sum solvers")->require_subcommand(1);

    auto* egz = z->add_subcommand("egz", "n elements summing to 0 mod n");
    egz->add_option("-n,--n", n_, "modulus")->required();
    egz->add_option("seq,--seq", seq_, "sequence over Z/n")->required()->delimiter(',');
    egz->callback([this] {
        action_ = [this] {
            auto s = elements(seq_, n_, "seq");
            auto w = egz_find(n_, s);
            if (!w) {
                emit({{"witness", nullptr}, {"reason", "sequence shorter than 2n-1 has no zero-sum n-subset"}});
                return kNoWitness;
            }
            if (!verify_zero_sum(FiniteGroup::cyclic(n_), s, *w, n_)) throw TheoremViolation("witness fails");
            emit({{"witness", io::emit_witness(*w)}});
            return kOk;
        };
    });

    auto* olson = z->add_subcommand("olson", "|G| elements with an ordering multiplying to 1");
    olson->add_option("-g,--group", group_, "group name (Z/n, S3, Z/2xZ/2) or table JSON file")->required();
    olson->add_option("seq,--seq", seq_, "sequence of element indices")->required()->delimiter(',');
    olson->add_flag("--increasing", flag_, "require the product in increasing position order");
    olson->callback([this] {
        action_ = [this] {
            auto g = group_arg(group_);
            auto s = elements(seq_, g.order(), "seq");
            auto w = flag_ ? olson_find_increasing(g, s) : olson_find(g, s);
            if (!w) {
                emit({{"witness", nullptr}});
                return kNoWitness;
            }
            if (!verify_zero_sum(g, s, *w, g.order())) throw TheoremViolation("witness fails");
            emit({{"group", g.name()}, {"witness", io::emit_witness(*w)}});
            return kOk;
        };
    });

    auto* hall = z->add_subcommand("hall", "a_i = b_i - c_i with b, c permutations of Z/p");
    hall->add_option("-p,--p", n_, "modulus")->required();
    hall->add_option("seq,--seq", seq_, "p elements of Z/p")->required()->delimiter(',');
    hall->add_flag("--via-transversal", flag_, "use the partial-transversal construction");
    hall->callback([this] {
        action_ = [this] {
            auto a = elements(seq_, n_, "seq");
            if (a.size() != n_) throw InputError("hall: expected " + std::to_string(n_) + " elements");
            std::optional<HallDecomposition> d;
            std::size_t sum = 0;
            for (auto x : a) sum += x;
            if (flag_) {
                if (sum % n_ == 0) d = hall_decompose_via_transversal(n_, a);
            } else {
                d = hall_decompose(n_, a);
            }
            if (!d) {
                emit({{"decomposition", nullptr}, {"reason", "sequence does not sum to zero"}});
                return kNoWitness;
            }
            if (!verify_hall(n_, a, *d)) throw TheoremViolation("decomposition fails");
            emit({{"b", d->b}, {"c", d->c}});
            return kOk;
        };
    });

    auto* tr = z->add_subcommand("transversal", "distinct b_i with {a_i + b_i} = {0..p-2}");
    tr->add_option("-p,--p", n_, "prime modulus")->required();
    tr->add_option("seq,--seq", seq_, "p-1 elements of Z/p")->required()->delimiter(',');
    tr->callback([this] {
        action_ = [this] {
            auto a = elements(seq_, n_, "seq");
            auto b = partial_transversal(n_, a);
            if (!verify_partial_transversal(n_, a, b)) throw TheoremViolation("transversal fails");
            emit({{"b", b}});
            return kOk;
        };
    });

    auto* con = z->add_subcommand("constrained", "EGZ with prescribed differences on adjacent pairs");
    con->add_option("-p,--p", n_, "prime modulus")->required();
    con->add_option("-d,--d", d_, "p-1 nonzero differences")->required()->delimiter(',');
    con->add_option("seq,--seq", seq_, "2p-1 elements of Z/p")->required()->delimiter(',');
    con->add_flag("--pair-indexing", flag_, "index d by column pair instead of subsequence position");
    con->callback([this] {
        action_ = [this] {
            auto s = elements(seq_, n_, "seq");
            auto d = elements(d_, n_, "d");
            const auto mode = flag_ ? DifferenceIndexing::kByColumnPair : DifferenceIndexing::kBySubsequencePosition;
            auto w = constrained_egz(n_, s, d, mode);
            if (!verify_constrained(n_, s, d, w, mode)) throw TheoremViolation("constrained witness fails");
            emit({{"indices", one_based(w.indices)}, {"b", w.b}});
            return kOk;
        };
    });

    auto* ord = z->add_subcommand("ordering", "order x_i = g_i^-1 h_i to multiply to 1");
    ord->add_option("-g,--group", group_, "group")->required();
    ord->add_option("--first", gl_, "first ordering")->required()->delimiter(',');
    ord->add_option("--second", hl_, "second ordering")->required()->delimiter(',');
    ord->callback([this] {
        action_ = [this] {
            auto g = group_arg(group_);
            auto a = elements(gl_, g.order(), "g"), b = elements(hl_, g.order(), "h");
            auto pi = product_ordering(g, a, b);
            std::vector<Element> xs;
            for (auto i : pi) xs.push_back(g.mul(g.inverse(a[i]), b[i]));
            if (g.product(xs) != g.identity()) throw TheoremViolation("ordering does not multiply to 1");
            emit({{"permutation", one_based(pi)}});
            return kOk;
        };
    });
}

void Runner::hyper(CLI::App& app) {
    auto* h = app.add_subcommand("hyper", "set families and hypergraphs")->require_subcommand(1);

    auto* cd = h->add_subcommand("cd", "colorability defect cd^n(F)");
    cd->add_option("family", file_, "set family JSON")->required();
    cd->add_option("-n,--n", n_, "number of parts")->required();
    cd->callback([this] {
        action_ = [this] {
            auto f = io::parse_set_family(io::read_file(file_));
            auto w = colorability_defect(f, n_);
            Json parts = Json::array();
            for (auto mask : w.parts) {
                std::vector<int> s;
                for (std::size_t x = 0; x < f.ground_size(); ++x)
                    if (mask >> x & 1U) s.push_back(static_cast<int>(x + 1));
                parts.push_back(s);
            }
            emit({{"defect", w.defect}, {"parts", parts}});
            return kOk;
        };
    });

    auto* kg = h->add_subcommand("kneser", "Kneser hypergraph KG^n(F)");
    kg->add_option("family", file_, "set family JSON")->required();
    kg->add_option("-n,--n", n_, "uniformity")->required();
    kg->callback([this] {
        action_ = [this] {
            emit(io::emit_hypergraph(kneser_hypergraph(io::parse_set_family(io::read_file(file_)), n_)));
            return kOk;
        };
    });

    auto* zs = h->add_subcommand("zerosum", "zero-sum hyperedge of KG^n(F) under a Z/n-coloring");
    zs->add_option("family", file_, "set family JSON")->required();
    zs->add_option("-n,--n", n_, "uniformity")->required();
    zs->add_option("-c,--coloring", coloring_, "one color per member")->required()->delimiter(',');
    zs->callback([this] {
        action_ = [this] {
            auto f = io::parse_set_family(io::read_file(file_));
            auto c = elements(coloring_, n_, "coloring");
            auto r = verify_cd_zero_sum(f, n_, c);
            Json j{{"defect", r.defect}, {"guaranteed", r.guarantee_applies}};
            if (!r.hyperedge) {
                j["hyperedge"] = nullptr;
                emit(j);
                return kNoWitness;
            }
            j["hyperedge"] = {{"edge", r.hyperedge->edge + 1}, {"members", one_based(r.hyperedge->vertices)}};
            emit(j);
            return kOk;
        };
    });

    auto* hz = h->add_subcommand("edge", "zero-sum hyperedge of a hypergraph under a G-coloring");
    hz->add_option("hypergraph", file_, "hypergraph JSON")->required();
    hz->add_option("-g,--group", group_, "group")->required();
    hz->add_option("-c,--coloring", coloring_, "one color per vertex")->required()->delimiter(',');
    hz->callback([this] {
        action_ = [this] {
            auto hg = io::parse_hypergraph(io::read_file(file_));
            auto g = group_arg(group_);
            auto c = elements(coloring_, g.order(), "coloring");
            auto w = zero_sum_hyperedge(hg, c, g);
            if (!w) {
                emit({{"hyperedge", nullptr}});
                return kNoWitness;
            }
            emit({{"hyperedge", {{"edge", w->edge + 1}, {"vertices", w->vertices}}}});
            return kOk;
        };
    });

    auto* chi = h->add_subcommand("chromatic", "exact chromatic number");
    chi->add_option("hypergraph", file_, "hypergraph JSON")->required();
    chi->callback([this] {
        action_ = [this] {
            auto hg = io::parse_hypergraph(io::read_file(file_));
            emit({{"chromatic_number", chromatic_number(hg)}, {"coloring", optimal_coloring(hg)}});
            return kOk;
        };
    });
}

void Runner::complex(CLI::App& app) {
    auto* c = app.add_subcommand("complex", "simplicial complex constructions")->require_subcommand(1);

    auto* cb = c->add_subcommand("chessboard", "chessboard complex on [m] x [n]");
    cb->add_option("m", m_, "rows")->required();
    cb->add_option("n", n_, "columns")->required();
    cb->callback([this] {
        action_ = [this] {
            emit(io::emit_complex(chessboard(m_, n_)));
            return kOk;
        };
    });

    auto* box = c->add_subcommand("boxcomplex", "box complex of a hypergraph with its group action");
    box->add_option("hypergraph", file_, "hypergraph JSON")->required();
    box->add_option("-g,--group", group_, "group")->required();
    box->add_flag("--nonempty-parts", flag_, "generate only by faces with every part nonempty");
    box->callback([this] {
        action_ = [this] {
            auto b = box_complex(io::parse_hypergraph(io::read_file(file_)), group_arg(group_),
                                 flag_ ? BoxFaces::kNonemptyPartsOnly : BoxFaces::kIncludeEmptyParts);
            emit(io::emit_action(b.action));
            return kOk;
        };
    });

    auto* dj = c->add_subcommand("deletedjoin", "deleted n-fold join");
    dj->add_option("complex", file_, "complex JSON")->required();
    dj->add_option("n", n_, "number of factors")->required();
    dj->callback([this] {
        action_ = [this] {
            emit(io::emit_complex(deleted_join(io::parse_complex(io::read_file(file_)), n_)));
            return kOk;
        };
    });

    auto* jn = c->add_subcommand("join", "join of two complexes");
    jn->add_option("first", file_, "complex JSON")->required();
    jn->add_option("second", file2_, "complex JSON")->required();
    jn->callback([this] {
        action_ = [this] {
            emit(io::emit_complex(join(io::parse_complex(io::read_file(file_)), io::parse_complex(io::read_file(file2_)))));
            return kOk;
        };
    });

    auto* sd = c->add_subcommand("sd", "barycentric subdivision");
    sd->add_option("complex", file_, "complex JSON")->required();
    sd->callback([this] {
        action_ = [this] {
            emit(io::emit_complex(barycentric_subdivision(io::parse_complex(io::read_file(file_)))));
            return kOk;
        };
    });

    auto* y = c->add_subcommand("avoidance", "complex on G x G avoiding permutation graphs");
    y->add_option("-g,--group", group_, "group")->required();
    y->add_option("--target-sum", target_, "avoid graphs of functions with this value sum (Z/p only)");
    y->callback([this] {
        action_ = [this] {
            auto g = group_arg(group_);
            if (target_ >= 0) {
                emit(io::emit_complex(permutation_avoidance_complex(g, static_cast<Element>(target_))));
            } else {
                emit(io::emit_complex(permutation_avoidance_complex(g)));
            }
            return kOk;
        };
    });

    auto* fv = c->add_subcommand("fvector", "face counts by dimension");
    fv->add_option("complex", file_, "complex JSON")->required();
    fv->callback([this] {
        action_ = [this] {
            auto k = io::parse_complex(io::read_file(file_));
            emit({{"dimension", k.dimension()}, {"f_vector", k.f_vector()}});
            return kOk;
        };
    });

    auto* fr = c->add_subcommand("free", "whether a group action is free");
    fr->add_option("action", file_, "action JSON")->required();
    fr->callback([this] {
        action_ = [this] {
            emit({{"free", action_is_free(io::parse_action(io::read_file(file_)))}});
            return kOk;
        };
    });
}

void Runner::topo(CLI::App& app) {
    auto* t = app.add_subcommand("topo", "homology, orientation, degree")->require_subcommand(1);

    auto* hom = t->add_subcommand("homology", "reduced integer homology");
    hom->add_option("complex", file_, "complex JSON")->required();
    hom->callback([this] {
        action_ = [this] {
            emit(io::emit_homology(reduced_homology(io::parse_complex(io::read_file(file_)))));
            return kOk;
        };
    });

    auto* ori = t->add_subcommand("orient", "orientation of a pseudomanifold");
    ori->add_option("complex", file_, "complex JSON")->required();
    ori->callback([this] {
        action_ = [this] {
            auto k = io::parse_complex(io::read_file(file_));
            emit({{"pseudomanifold", true}, {"signs", orient(k).signs}});
            return kOk;
        };
    });

    auto* deg = t->add_subcommand("degree", "degree of a simplicial map");
    deg->add_option("map", file_, "map JSON (omit with --projection)");
    deg->add_option("--projection", n_, "use the column projection of the p-1 by p chessboard");
    deg->callback([this] {
        action_ = [this] {
            if (file_.empty() && n_ == 0) throw InputError("degree: give a map file or --projection p");
            auto r = file_.empty() ? degree(chessboard_column_projection(n_ - 1, n_))
                                   : degree(io::parse_map(io::read_file(file_)));
            emit({{"degree", r.degree},
                  {"magnitude", r.magnitude},
                  {"source_orientation", r.source.signs},
                  {"target_orientation", r.target.signs}});
            return kOk;
        };
    });

    auto* cert = t->add_subcommand("certify", "homology-level Dold certificate");
    cert->add_option("action", file_, "action JSON")->required();
    cert->add_option("--sphere-dim", sphere_dim_, "target sphere dimension")->required();
    cert->callback([this] {
        action_ = [this] {
            auto c = dold_certificate(io::parse_action(io::read_file(file_)), sphere_dim_);
            emit({{"free", c.free},
                  {"connectivity", c.connectivity == kAcyclic ? Json("acyclic") : Json(c.connectivity)},
                  {"sphere_dim", c.sphere_dim},
                  {"certified", c.certified},
                  {"verdict", c.verdict},
                  {"note", c.note}});
            return c.certified ? kOk : kNoWitness;
        };
    });
}

void Runner::frac(CLI::App& app) {
    auto* f = app.add_subcommand("frac", "exact rational solvers")->require_subcommand(1);

    auto* egz = f->add_subcommand("egz", "fractional EGZ witness");
    egz->add_option("measures", file_, "measures JSON")->required();
    egz->callback([this] {
        action_ = [this] {
            auto ms = io::parse_measures(io::read_file(file_), "$", g_.normalize);
            auto w = fractional_egz(ms);
            if (!verify_fractional(ms, w)) throw TheoremViolation("fractional witness fails");
            emit(io::emit_fractional(w));
            return kOk;
        };
    });

    auto* bal = f->add_subcommand("balanced", "balanced shifted family");
    bal->add_option("sets", file_, "sets JSON")->required();
    bal->callback([this] {
        action_ = [this] {
            auto [p, sets] = io::parse_residue_sets(io::read_file(file_));
            auto w = balanced_witness(p, sets);
            if (!verify_balanced(p, w)) throw TheoremViolation("balanced witness fails");
            emit(io::emit_balanced(w));
            return kOk;
        };
    });

    auto* bk = f->add_subcommand("birkhoff", "permutation inside the support of a doubly stochastic matrix");
    bk->add_option("matrix", file_, "matrix JSON")->required();
    bk->callback([this] {
        action_ = [this] {
            auto m = io::parse_matrix(io::read_file(file_), "$", g_.normalize);
            auto pi = positive_permutation(m);
            for (std::size_t i = 0; i < pi.size(); ++i)
                if (m[i][pi[i]] <= 0) throw TheoremViolation("permutation leaves the support");
            emit({{"permutation", one_based(pi)}});
            return kOk;
        };
    });

    auto* sh = f->add_subcommand("shift", "shifted measure");
    sh->add_option("measure", file_, "measure JSON")->required();
    sh->add_option("--by", n_, "shift")->required();
    sh->callback([this] {
        action_ = [this] {
            auto mu = io::parse_measure(io::read_file(file_), "$", g_.normalize);
            emit(io::emit_measure(shift_measure(mu, static_cast<Element>(n_ % mu.modulus()))));
            return kOk;
        };
    });
}

void Runner::verify(CLI::App& app) {
    auto* v = app.add_subcommand("verify", "run verification suites");
    v->add_option("suites", suites_, "suite names or 'all'")->required();
    v->add_option("--scale", scale_, "small or full")->check(CLI::IsMember({"small", "full"}));
    v->callback([this] {
        action_ = [this] {
            std::vector<std::string> names = suites_;
            if (names.size() == 1 && names[0] == "all") names = suite_names();
            SuiteOptions o{scale_ == "full" ? Scale::kFull : Scale::kSmall, g_.seed, g_.jobs};
            bool ok = true;
            Json reports = Json::array();
            for (const auto& name : names) {
                auto r = run_suite(name, o);
                ok = ok && r.passed();
                if (!g_.json) {
                    out_ << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.instances << " instances, "
                         << r.failures.size() << " failures, " << r.seconds << " s\n";
                    for (const auto& n : r.notes) out_ << "  " << n << "\n";
                    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) out_ << "  ! " << r.failures[i] << "\n";
                }
                reports.push_back({{"suite", r.suite},
                                   {"instances", r.instances},
                                   {"failures", r.failures},
                                   {"notes", r.notes},
                                   {"seconds", r.seconds}});
            }
            if (g_.json) out_ << reports.dump() << "\n";
            return ok ? kOk : kTheoremViolation;
        };
    });
}

int Runner::run(const std::vector<std::string>& args) {
    CLI::App app{"zero-sum Ramsey verification toolkit", "zsr"};
    app.require_subcommand(1);
    app.add_option("--seed", g_.seed, "seed for sampled suites");
    app.add_option("--jobs", g_.jobs, "worker threads (0 = all cores)");
    app.add_flag("--json", g_.json, "compact JSON output");
    app.add_flag("--normalize", g_.normalize, "accept non-reduced rationals and reduce them");
    zerosum(app);
    hyper(app);
    complex(app);
    topo(app);
    frac(app);
    verify(app);

    std::vector<std::string> argv_store{"zsr"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out_ << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err_ << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (!action_) {
        err_ << "error: no command\n";
        return kInputError;
    }
    try {
        return action_();
    } catch (const TheoremViolation& e) {
        err_ << "theorem violation: " << e.what() << "\n";
        return kTheoremViolation;
    } catch (const InputError& e) {
        err_ << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err_ << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        err_ << "internal error: " << e.what() << "\n";
        return kTheoremViolation;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Runner(out, err).run(args);
}

}  // namespace zsr::cli
