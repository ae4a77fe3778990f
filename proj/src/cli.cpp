#include <tclique/cli.hpp>
#include <tclique/constructions.hpp>
#include <tclique/gadgets.hpp>
#include <tclique/io.hpp>
#include <tclique/reduction.hpp>
#include <tclique/rulecheck.hpp>
#include <tclique/solvers.hpp>
#include <tclique/subword.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <thread>

namespace tclique::cli {

namespace {

    struct Globals
    {
        unsigned threads = std::max(1U, std::thread::hardware_concurrency());
        std::uint64_t seed = 1;
        std::optional<long long> budget_ms;
        bool one_based = false;
    };

    // Per-invocation state shared by the verb handlers.
    class Context
    {
    public:
        Context(std::string command, const Globals & g) : globals(g) { env.command = std::move(command); }

        SearchOptions search() const
        {
            SearchOptions o;
            o.threads = globals.threads;
            if (globals.budget_ms)
                o.time_limit = std::chrono::milliseconds(*globals.budget_ms);
            return o;
        }

        std::string read(const std::string & path)
        {
            std::string text;
            if (path == "-") {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            }
            else {
                text = read_file(path);
            }
            env.inputs.emplace_back(path, digest(text));
            return text;
        }

        Tournament tournament(const std::string & path) { return parse_tournament(read(path), path); }
        Ordering ordering(const std::string & path) { return parse_ordering(read(path), path); }

        Json ord(const Ordering & o) const { return ordering_json(o, globals.one_based); }
        Json vertex(Vertex v) const { return v + (globals.one_based ? 1 : 0); }
        Json vertices(const std::vector<Vertex> & vs) const
        {
            Json out = Json::array();
            for (auto v : vs)
                out.push_back(vertex(v));
            return out;
        }

        void nodes(std::uint64_t n) { env.nodes_explored = env.nodes_explored.value_or(0) + n; }

        const Globals & globals;
        ReportEnvelope env;
        int code = ok;
        /// Replaces the JSON envelope on standard output when set.
        std::optional<std::string> text;
    };

    using Handler = std::function<void(Context &)>;

    Json marked_json(const Context & ctx, const MarkedGadget & g)
    {
        Json arcs = Json::array();
        for (auto & a : g.marked_arcs)
            arcs.push_back({{"name", a.name}, {"tail", ctx.vertex(a.tail)}, {"head", ctx.vertex(a.head)}});
        Json certified = Json::array();
        for (auto & c : g.certified)
            certified.push_back({{"name", c.name}, {"ordering", ctx.ord(c.ordering)}, {"forward", c.forward},
                {"backedge_clique_number", ordering_clique_number(g.tournament, c.ordering)}});
        return {{"vertices", g.tournament.size()}, {"omega", g.omega}, {"rows", g.tournament.rows()}, {"marked_arcs", arcs},
            {"certified_orderings", certified}};
    }

    Json gadget_report_json(const Context & ctx, const GadgetReport & r)
    {
        Json witnesses = Json::array();
        for (auto & [name, o] : r.witnesses)
            witnesses.push_back({{"name", name}, {"ordering", ctx.ord(o)}});
        Json out = {{"omega", r.omega}, {"minimum_orderings", r.minimum_orderings}, {"property_holds", r.property_holds},
            {"pattern_counts", r.pattern_counts}, {"witnesses", witnesses}};
        out["violation"] = r.violation ? ctx.ord(*r.violation) : Json(nullptr);
        return out;
    }

    Json rule_report_json(const Context & ctx, const RuleReport & r)
    {
        Json cells = Json::array();
        for (auto & c : r.cells) {
            Json violations = Json::array();
            for (auto & w : c.violations) {
                Json roles = Json::object();
                for (auto [name, v] : w.roles)
                    roles[std::string(1, name)] = ctx.vertex(v);
                violations.push_back({{"rule", w.rule}, {"roles", roles}});
            }
            cells.push_back({{"ordering", ctx.ord(c.ordering)}, {"x", ctx.vertex(c.x)}, {"all_rules_hold", c.all_rules_hold()},
                {"violations", violations}});
        }
        return {{"omega", r.omega}, {"orderings", r.ordering_count}, {"cells", cells}, {"verdict", r.excluded ? "excluded" : "not-excluded"}};
    }

    std::vector<bool> parse_assignment(const std::string & text)
    {
        std::vector<bool> nu;
        for (char c : text) {
            if (c == '1' || c == 't' || c == 'T')
                nu.push_back(true);
            else if (c == '0' || c == 'f' || c == 'F')
                nu.push_back(false);
            else if (c != ',' && c != ' ')
                throw ParseError("--assign", 0, 0, std::string("unexpected character '") + c + "'");
        }
        return nu;
    }

    Ordering omega_ordering_for(Context & ctx, const Tournament & t, const std::string & ordering_path)
    {
        if (! ordering_path.empty())
            return ctx.ordering(ordering_path);
        auto r = omega(t, ctx.search());
        ctx.nodes(r.stats.nodes);
        return r.witness;
    }

    void emit_construction(Context & ctx, const Construction & c, const std::string & out_path, const std::string & layout_path)
    {
        ctx.env.result["vertices"] = c.tournament.size();
        ctx.env.result["ordering"] = ctx.ord(c.ordering);
        ctx.env.result["ordering_backedge_clique_number"] = ordering_clique_number(c.tournament, c.ordering);
        if (! layout_path.empty())
            write_file(layout_path, layout_json(c.layout).dump(2) + "\n");
        if (! out_path.empty())
            save_tournament(c.tournament, out_path);
        else
            ctx.env.result["tournament"] = tournament_json(c.tournament);
    }

    void emit_tournament(Context & ctx, const Tournament & t, const std::string & out_path)
    {
        ctx.env.result["vertices"] = t.size();
        if (! out_path.empty())
            save_tournament(t, out_path);
        else
            ctx.env.result["tournament"] = tournament_json(t);
    }

    // Lazily-parsed CLI11 structure with one handler per leaf subcommand.
    class Tool
    {
    public:
        Tool()
        {
            app_.require_subcommand(1);
            app_.fallthrough();
            app_.set_version_flag("--version", version_string);
            app_.add_option("--threads", g_.threads, "Worker threads")->check(CLI::PositiveNumber);
            app_.add_option("--seed", g_.seed, "Seed for randomized checks");
            app_.add_option("--budget-ms", g_.budget_ms, "Wall-clock budget per search")->envname(budget_env);
            app_.add_option("--render", render_, "Vertex rendering: 'paper' for 1-based ids")->check(CLI::IsMember({"paper", "zero"}));
            solvers();
            constructions();
            gadgets();
            reduction();
            rules();
            pass();
        }

        int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            try {
                app_.parse(reversed);
            }
            catch (const CLI::CallForHelp &) {
                out << app_.help();
                return ok;
            }
            catch (const CLI::CallForAllHelp &) {
                out << app_.help("", CLI::AppFormatMode::All);
                return ok;
            }
            catch (const CLI::Success &) {
                out << version_string << "\n";
                return ok;
            }
            catch (const CLI::ParseError & e) {
                err << e.what() << "\n";
                return input_error;
            }
            g_.one_based = render_ == "paper";

            auto * leaf = selected();
            Context ctx(path_of(leaf), g_);
            auto start = std::chrono::steady_clock::now();
            auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); };
            ctx.env.budget_status = g_.budget_ms ? "ok" : "unbounded";
            try {
                handlers_.at(leaf)(ctx);
            }
            catch (const BudgetExhausted & e) {
                ctx.env.budget_status = "exhausted";
                ctx.env.result = {{"error", e.what()}};
                ctx.env.nodes_explored = e.nodes();
                ctx.code = budget_exhausted;
                ctx.text.reset();
            }
            catch (const MaterializationRefused & e) {
                err << e.what() << "\n";
                ctx.env.result = {{"error", e.what()}, {"sizing", sizing_json(e.sizing())}};
                ctx.code = input_error;
                ctx.text.reset();
            }
            catch (const std::exception & e) {
                err << ctx.env.command << ": " << e.what() << "\n";
                return input_error;
            }
            ctx.env.elapsed_ms = elapsed();
            if (ctx.text)
                out << *ctx.text;
            else
                out << envelope_json(ctx.env).dump(2) << "\n";
            return ctx.code;
        }

    private:
        CLI::App * selected()
        {
            CLI::App * app = &app_;
            while (! app->get_subcommands().empty())
                app = app->get_subcommands().front();
            return app;
        }

        static std::string path_of(CLI::App * leaf)
        {
            std::string path;
            for (auto * a = leaf; a && a->get_parent(); a = a->get_parent())
                path = a->get_name() + (path.empty() ? "" : " " + path);
            return path;
        }

        CLI::App * verb(CLI::App & parent, const std::string & name, const std::string & description, Handler h)
        {
            auto * sub = parent.add_subcommand(name, description);
            handlers_[sub] = std::move(h);
            return sub;
        }

        void solvers()
        {
            auto * omega_cmd = verb(app_, "omega", "Tournament clique number with a witness ordering", [this](Context & ctx) {
                auto t = ctx.tournament(file_);
                auto r = omega(t, ctx.search());
                ctx.nodes(r.stats.nodes);
                ctx.env.result = {{"value", r.value}, {"witness", ctx.ord(r.witness)}};
            });
            omega_cmd->add_option("file", file_, "Tournament (.trn or JSON)")->required();

            auto * decide = verb(app_, "omega-decide", "Is there an ordering with backedge clique number <= k?", [this](Context & ctx) {
                auto t = ctx.tournament(file_);
                auto r = omega_decide(t, k_, ctx.search());
                ctx.nodes(r.stats.nodes);
                ctx.env.result = {{"k", k_}, {"decision", r.holds}};
                ctx.env.result["witness"] = r.witness ? ctx.ord(*r.witness) : Json(nullptr);
                ctx.code = r.holds ? ok : negative;
            });
            decide->add_option("file", file_)->required();
            decide->add_option("--k", k_)->required()->check(CLI::PositiveNumber);

            auto * orders = verb(app_, "orderings", "Enumerate omega-orderings", [this](Context & ctx) {
                auto t = ctx.tournament(file_);
                auto opts = ctx.search();
                auto value = omega(t, opts).value;
                auto list = enumerate_orderings_within(t, value, first_, opts);
                Json all = Json::array();
                for (auto & o : list)
                    all.push_back(ctx.ord(o));
                ctx.env.result = {{"omega", value}, {"count", list.size()}, {"orderings", all}};
            });
            orders->add_option("file", file_)->required();
            orders->add_option("--first", first_, "Only orderings starting with this vertex (0-based)");

            auto * chi_cmd = verb(app_, "chi", "Dichromatic number with an acyclic colouring", [this](Context & ctx) {
                auto t = ctx.tournament(file_);
                auto r = chi(t, ctx.search());
                ctx.nodes(r.stats.nodes);
                ctx.env.result = {{"value", r.value}, {"colouring", r.colouring}};
            });
            chi_cmd->add_option("file", file_)->required();

            auto * chi_dec = verb(app_, "chi-decide", "Can the vertices be split into k acyclic classes?", [this](Context & ctx) {
                auto t = ctx.tournament(file_);
                auto r = chi_decide(t, k_, ctx.search());
                ctx.nodes(r.stats.nodes);
                ctx.env.result = {{"k", k_}, {"decision", r.holds}, {"cycle_cuts", r.cuts}};
                ctx.env.result["colouring"] = r.colouring ? Json(*r.colouring) : Json(nullptr);
                ctx.code = r.holds ? ok : negative;
            });
            chi_dec->add_option("file", file_)->required();
            chi_dec->add_option("--k", k_)->required()->check(CLI::PositiveNumber);

            auto * forcing = verb(app_, "forcing", "Does every ordering within k put u before v?", [this](Context & ctx) {
                auto t = ctx.tournament(file_);
                auto r = forcing_holds(t, u_, v_, k_, ctx.search());
                ctx.nodes(r.stats.nodes);
                ctx.env.result = {{"u", ctx.vertex(u_)}, {"v", ctx.vertex(v_)}, {"k", k_}, {"decision", r.holds}, {"vacuous", r.vacuous}};
                ctx.env.result["counterexample"] = r.counterexample ? ctx.ord(*r.counterexample) : Json(nullptr);
                ctx.code = r.holds ? ok : negative;
            });
            forcing->add_option("file", file_)->required();
            forcing->add_option("--u", u_)->required();
            forcing->add_option("--v", v_)->required();
            forcing->add_option("--k", k_)->required()->check(CLI::PositiveNumber);

            auto * smallest = verb(app_, "search-min-omega", "Smallest tournament with clique number k", [this](Context & ctx) {
                auto method = method_ == "enumeration" ? OmegaMethod::enumeration : OmegaMethod::branch_and_bound;
                auto r = min_order_with_omega(k_, nmax_, method, ctx.search());
                ctx.env.result = {{"k", k_}, {"nmax", nmax_}, {"method", method_}, {"found", r.has_value()}};
                if (r) {
                    ctx.env.result["order"] = r->order;
                    ctx.env.result["witness"] = tournament_json(r->witness);
                    ctx.env.result["canonical_code"] = canonical_code(r->witness);
                }
                ctx.code = r ? ok : negative;
            });
            smallest->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
            smallest->add_option("--nmax", nmax_)->required()->check(CLI::Range(1, 11));
            smallest->add_option("--method", method_)->check(CLI::IsMember({"bnb", "enumeration"}));
        }

        void constructions()
        {
            auto * construct = app_.add_subcommand("construct", "Build a tournament");
            construct->require_subcommand(1);
            auto common = [this](CLI::App * sub) {
                sub->add_option("--out", out_, "Write the tournament here (.trn or .json)");
                sub->add_option("--layout", layout_, "Write the copy layout JSON here");
                sub->add_option("--vertex-budget", vertex_budget_, "Largest construction to materialize");
                sub->add_flag("--sizing-only", sizing_only_, "Report the closed-form size without building");
            };
            auto options = [this] {
                ConstructionOptions o;
                o.vertex_budget = vertex_budget_;
                return o;
            };

            auto * tt_cmd = verb(*construct, "tt", "Transitive tournament", [this](Context & ctx) { emit_tournament(ctx, tt(n_), out_); });
            tt_cmd->add_option("--n", n_)->required();
            common(tt_cmd);
            common(verb(*construct, "c3", "Directed triangle", [this](Context & ctx) { emit_tournament(ctx, c3(), out_); }));

            auto * arrow_cmd = verb(*construct, "arrow", "first => second", [this](Context & ctx) {
                emit_tournament(ctx, arrow(ctx.tournament(files_.at(0)), ctx.tournament(files_.at(1))), out_);
            });
            arrow_cmd->add_option("files", files_)->expected(2)->required();
            common(arrow_cmd);

            auto * delta_cmd = verb(*construct, "delta", "Delta(first, second, third)", [this](Context & ctx) {
                emit_tournament(ctx, delta(ctx.tournament(files_.at(0)), ctx.tournament(files_.at(1)), ctx.tournament(files_.at(2))), out_);
            });
            delta_cmd->add_option("files", files_)->expected(3)->required();
            common(delta_cmd);

            auto * lift_cmd = verb(*construct, "lift", "Delta(1, D, W)", [this](Context & ctx) {
                auto d = ctx.tournament(files_.at(0));
                auto w = ctx.tournament(files_.at(1));
                auto lifted = lift(d.digraph(), w.digraph());
                ctx.env.result["landmarks"] = {{"inner", {lifted.landmarks.inner.first, lifted.landmarks.inner.count}},
                    {"gadget", {lifted.landmarks.gadget.first, lifted.landmarks.gadget.count}}, {"apex", lifted.landmarks.apex}};
                emit_tournament(ctx, Tournament(std::move(lifted.graph)), out_);
            });
            lift_cmd->add_option("files", files_)->expected(2)->required();
            common(lift_cmd);

            auto * amp = verb(*construct, "amplifier", "Copy/label amplifier of a base tournament", [this, options](Context & ctx) {
                auto base = ctx.tournament(file_);
                if (sizing_only_) {
                    ctx.env.result["sizing"] = sizing_json(amplifier_sizing(base.size(), vertex_budget_));
                    return;
                }
                auto ord = omega_ordering_for(ctx, base, ordering_path_);
                emit_construction(ctx, amplifier(base, ord, options()), out_, layout_);
            });
            amp->add_option("file", file_)->required();
            amp->add_option("--ordering", ordering_path_, "Omega-ordering of the base; computed when absent");
            common(amp);

            auto * pi_cmd = verb(*construct, "pi", "Pi construction over a base tournament", [this, options](Context & ctx) {
                auto base = ctx.tournament(file_);
                if (sizing_only_) {
                    ctx.env.result["sizing"] = sizing_json(pi_sizing(base.size(), vertex_budget_));
                    return;
                }
                auto ord = omega_ordering_for(ctx, base, ordering_path_);
                emit_construction(ctx, pi(base, ord, options()), out_, layout_);
            });
            pi_cmd->add_option("file", file_)->required();
            pi_cmd->add_option("--ordering", ordering_path_);
            common(pi_cmd);

            auto * dk = verb(*construct, "dk", "D_k: C3 iterated under Pi", [this, options](Context & ctx) {
                if (sizing_only_) {
                    ctx.env.result["sizing"] = sizing_json(d_family_sizing(k_, vertex_budget_));
                    return;
                }
                emit_construction(ctx, d_family(k_, options()), out_, layout_);
            });
            dk->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
            common(dk);
        }

        void gadgets()
        {
            auto * gadget = app_.add_subcommand("gadget", "Embedded gadget tournaments");
            gadget->require_subcommand(1);
            auto * show = verb(*gadget, "show", "Print a gadget", [this](Context & ctx) {
                if (which_ == "r5") {
                    auto t = r5();
                    ctx.env.result = {{"name", "r5"}, {"vertices", t.size()}, {"rows", t.rows()}};
                    return;
                }
                ctx.env.result = marked_json(ctx, which_ == "var" ? var_base() : clause_base());
                ctx.env.result["name"] = which_;
            });
            show->add_option("which", which_)->required()->check(CLI::IsMember({"var", "clause", "r5"}));

            auto * check = verb(*gadget, "verify", "Exhaustively check a gadget's marked-arc property", [this](Context & ctx) {
                auto r = which_ == "var" ? verify_var_base(ctx.search()) : verify_clause_base(ctx.search());
                ctx.nodes(r.stats.nodes);
                ctx.env.result = gadget_report_json(ctx, r);
                ctx.env.result["name"] = which_;
                ctx.code = r.property_holds ? ok : negative;
            });
            check->add_option("which", which_)->required()->check(CLI::IsMember({"var", "clause"}));
        }

        void reduction()
        {
            auto * reduce = verb(app_, "reduce", "Compile a 3-CNF formula into a tournament", [this](Context & ctx) {
                auto formula = parse_dimacs(ctx.read(cnf_));
                auto w = ctx.tournament(gadget_);
                auto w_ord = omega_ordering_for(ctx, w, ordering_path_);
                BuildOptions opts;
                opts.vertex_budget = vertex_budget_;
                auto inst = build(formula, w, w_ord, opts);
                auto audit = audit_reduction(inst);
                if (! out_.empty())
                    save_tournament(inst.tournament, out_);
                if (! landmarks_.empty())
                    write_file(landmarks_, landmarks_json(inst).dump(2) + "\n");
                ctx.env.result = {{"variables", formula.variable_count}, {"clauses", formula.clauses.size()},
                    {"vertices", inst.tournament.size()}, {"reversed_arcs", inst.reversed_arcs.size()}, {"audit_ok", audit.ok},
                    {"audit_problems", audit.problems}, {"gadget", {{"mode", inst.gadget.mode}, {"w_order", inst.gadget.w_order},
                                                                      {"omega_verified", inst.gadget.omega_verified}}}};
                if (out_.empty())
                    ctx.env.result["tournament"] = tournament_json(inst.tournament);
            });
            reduce->add_option("--cnf", cnf_, "DIMACS formula, three literals per clause")->required();
            reduce->add_option("--gadget", gadget_, "Separator tournament W with omega 3")->required();
            reduce->add_option("--gadget-ordering", ordering_path_, "Omega-ordering of W; computed when absent");
            reduce->add_option("--out", out_);
            reduce->add_option("--landmarks", landmarks_);
            reduce->add_option("--vertex-budget", vertex_budget_);

            auto instance = [this](Context & ctx) {
                auto t = ctx.tournament(instance_);
                return instance_from_json(t, Json::parse(ctx.read(landmarks_)));
            };
            auto * witness = app_.add_subcommand("witness", "Translate between assignments and orderings");
            witness->require_subcommand(1);
            auto * to_ord = verb(*witness, "to-ordering", "Ordering built from a satisfying assignment", [this, instance](Context & ctx) {
                auto inst = instance(ctx);
                auto ord = ordering_from_assignment(inst, parse_assignment(assign_));
                if (! out_.empty())
                    write_file(out_, ordering_json(ord).dump() + "\n");
                ctx.env.result = {{"ordering", ctx.ord(ord)}};
            });
            auto * to_assign = verb(*witness, "to-assignment", "Assignment read off an ordering", [this, instance](Context & ctx) {
                auto inst = instance(ctx);
                auto nu = assignment_from_ordering(inst, ctx.ordering(ordering_path_));
                ctx.env.result = {{"assignment", nu}, {"satisfies", inst.formula.satisfied_by(nu)}};
            });
            for (auto * sub : {to_ord, to_assign}) {
                sub->add_option("--instance", instance_, "Instance tournament")->required();
                sub->add_option("--landmarks", landmarks_, "Landmark JSON written by reduce")->required();
            }
            to_ord->add_option("--assign", assign_, "Values such as 1,0,1")->required();
            to_ord->add_option("--out", out_);
            to_assign->add_option("--ordering", ordering_path_)->required();

            auto * verify = verb(app_, "verify-ordering", "Check an ordering for K4 in its backedge graph", [this](Context & ctx) {
                auto t = ctx.tournament(instance_);
                ReductionInstance inst;
                inst.tournament = t;
                auto r = verify_ordering(inst, ctx.ordering(ordering_path_));
                ctx.env.result = {{"k4_free", r.k4_free}, {"has_triangle", r.has_triangle}, {"max_clique_found", r.max_clique_found}};
                ctx.env.result["k4_witness"] = r.k4_witness ? ctx.vertices(*r.k4_witness) : Json(nullptr);
                ctx.code = r.k4_free ? ok : negative;
            });
            verify->add_option("--instance", instance_)->required();
            verify->add_option("--ordering", ordering_path_)->required();
        }

        void rules()
        {
            auto * check = verb(app_, "check-rules", "Evaluate the exclusion rules on every omega-ordering and pivot", [this](Context & ctx) {
                RuleCheckOptions opts;
                opts.first_vertex = first_;
                opts.quotient_automorphisms = quotient_;
                opts.search = ctx.search();
                auto report = check_rules(ctx.tournament(file_), opts);
                if (g_.one_based)
                    ctx.text = render_paper(report);
                ctx.env.result = rule_report_json(ctx, report);
            });
            check->add_option("file", file_)->required();
            check->add_option("--first-vertex", first_, "Only orderings starting with this vertex (0-based)");
            check->add_flag("--quotient", quotient_, "One ordering per automorphism orbit");
        }

        void pass()
        {
            auto * group = app_.add_subcommand("pass", "Permutations avoiding forbidden subwords");
            group->require_subcommand(1);
            auto * from = verb(*group, "from-tournament", "Forbidden words of a tournament", [this](Context & ctx) {
                auto inst = to_pass(ctx.tournament(file_));
                if (! out_.empty())
                    write_file(out_, pass_json(inst).dump() + "\n");
                ctx.env.result = pass_json(inst);
                ctx.env.result["tournament_closed"] = is_tournament_closed(inst);
            });
            from->add_option("file", file_)->required();
            from->add_option("--out", out_);

            auto * solve = verb(*group, "solve", "Smallest avoiding permutation", [this](Context & ctx) {
                auto inst = pass_from_json(Json::parse(ctx.read(file_)));
                auto p = solve_pass(inst, ctx.search());
                ctx.env.result = {{"solvable", p.has_value()}};
                ctx.env.result["permutation"] = p ? Json(*p) : Json(nullptr);
                ctx.code = p ? ok : negative;
            });
            solve->add_option("file", file_, "PassInstance JSON")->required();
        }

        CLI::App app_{"Tournament clique number toolkit", "tclique"};
        std::map<CLI::App *, Handler> handlers_;
        Globals g_;
        std::string render_ = "zero";

        std::string file_, out_, layout_, ordering_path_, which_, cnf_, gadget_, landmarks_, instance_, assign_;
        std::string method_ = "bnb";
        std::vector<std::string> files_;
        std::size_t k_ = 0, n_ = 0, nmax_ = 0, vertex_budget_ = ConstructionOptions{}.vertex_budget;
        Vertex u_ = 0, v_ = 0;
        std::optional<Vertex> first_;
        bool sizing_only_ = false, quotient_ = false;
    };
} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    Tool tool;
    return tool.run(args, out, err);
}

} // namespace tclique::cli
