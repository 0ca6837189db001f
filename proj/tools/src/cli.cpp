#include "tjr_app/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tjr/ejr_ilp.hpp"
#include "tjr/errors.hpp"
#include "tjr/generators.hpp"
#include "tjr/io.hpp"
#include "tjr/rules.hpp"
#include "tjr/verify.hpp"
#include "tjr_app/acceptance.hpp"

namespace tjr::app
{

namespace
{

// Writes to -o PATH when given, else to `out`.
void emit( const std::string& path, const std::string& text, std::ostream& out )
{
    if ( path.empty() )
        out << text;
    else
        write_file( path, text );
}

struct VerifyArgs
{
    std::string election;
    std::string outcome;
    std::string axiom;
    bool weak = false;
    std::string method = "route";
    int budget_n = VerifyConfig{}.max_bruteforce_voters;
    std::uint64_t budget_enum = VerifyConfig{}.max_enumeration;
    std::string output;
};

int cmd_verify( const VerifyArgs& a, std::ostream& out )
{
    const Election e = parse_election( read_file( a.election ) );
    const Outcome o = parse_outcome( read_file( a.outcome ) );
    o.validate_for( e );
    const AxiomSpec spec{ parse_axiom( a.axiom ), a.weak ? Strength::weak : Strength::strong };
    const VerifyConfig config{ a.budget_n, a.budget_enum };

    VerifyReport report;
    if ( a.method == "route" )
        report = route( e, o, spec, config );
    else if ( a.method == "bruteforce" )
        report = verify_bruteforce( e, o, spec, config );
    else if ( a.method == "enumerative" )
        report = verify_enumerative( e, o, spec, config );
    else if ( a.method == "monotonic" )
        report = verify_monotonic( e, o, spec );
    else if ( a.method == "two-candidate-wjr" || a.method == "two-candidate-jr-nonempty" ) {
        const bool wjr = a.method == "two-candidate-wjr";
        const AxiomSpec fixed{ Axiom::jr, wjr ? Strength::weak : Strength::strong };
        if ( spec != fixed )
            throw InputError( a.method + " only decides " + to_string( fixed ) );
        report = wjr ? verify_two_candidates_wjr( e, o ) : verify_two_candidates_jr_nonempty( e, o );
    } else
        throw InputError( "unknown method '" + a.method + "'" );

    emit( a.output, report_to_json( report ), out );
    return report.holds ? exit_ok : exit_violated;
}

struct SolveArgs
{
    std::string election;
    std::string rule;
    bool max_welfare = false;
    std::string floors;
    std::string emit_lp_path;
    std::string trace;
    int budget_n = RuleConfig{}.max_voters;
    std::uint64_t budget_nodes = SolverConfig{}.max_nodes;
    std::string output;
};

int cmd_solve( const SolveArgs& a, std::ostream& out )
{
    const Election e = parse_election( read_file( a.election ) );
    if ( a.rule != "ilp" && ( a.max_welfare || !a.floors.empty() || !a.emit_lp_path.empty() ) )
        throw InputError( "--max-welfare, --floors and --emit-lp apply to --rule ilp only" );

    if ( a.rule == "gcr" || a.rule == "gcr-mono" ) {
        const RuleResult result = a.rule == "gcr" ? gcr( e, RuleConfig{ a.budget_n } ) : gcr_monotonic( e );
        if ( !a.trace.empty() )
            write_file( a.trace, trace_to_json( a.rule, result.family ) );
        emit( a.output, outcome_to_json( result.outcome ), out );
        return exit_ok;
    }
    if ( a.rule != "ilp" )
        throw InputError( "unknown rule '" + a.rule + "' (expected gcr, gcr-mono or ilp)" );

    EjrModelOptions options;
    options.max_welfare = a.max_welfare;
    if ( !a.floors.empty() )
        options.floors = parse_floors( read_file( a.floors ), e.voters() );
    const EjrModel model = build_model( e, options, a.budget_n );
    if ( !a.emit_lp_path.empty() )
        write_file( a.emit_lp_path, emit_lp( model.lp ) );
    const SolveResult result = solve_exact( model.lp, SolverConfig{ a.budget_nodes } );

    nlohmann::ordered_json doc;
    doc[ "status" ] = to_string( result.status );
    if ( result.status == SolveStatus::infeasible ) {
        doc[ "outcome" ] = nullptr;
        doc[ "welfare" ] = nullptr;
    } else {
        const Outcome o = decode( model, result.values );
        std::vector< int > choices;
        for ( int c : o.choices() )
            choices.push_back( c + 1 );
        doc[ "outcome" ] = choices;
        doc[ "welfare" ] = welfare( e, o );
    }
    emit( a.output, doc.dump() + "\n", out );
    return result.status == SolveStatus::infeasible ? exit_infeasible : exit_ok;
}

struct ReduceArgs
{
    std::string graph;
    int kappa = 0;
    bool pad = false;
    bool blow_up = false;
    std::string axiom = "jr";
    std::string election_out;
    std::string outcome_out;
    std::string output;
};

int cmd_reduce( const std::string& kind, const ReduceArgs& a, std::ostream& out )
{
    Graph g = parse_graph( read_file( a.graph ) );
    std::optional< ReductionBundle > bundle;
    if ( kind == "clique" )
        bundle = gen_clique_wjr( g, a.kappa );
    else if ( kind == "is3" )
        bundle = gen_is3_wejr( g, a.kappa );
    else if ( kind == "biclique" ) {
        int kappa = a.kappa;
        if ( a.blow_up ) {
            auto blown = blowup( g, kappa );
            g = std::move( blown.graph );
            kappa = blown.kappa;
        }
        bundle = gen_biclique_jr( g, kappa, a.pad, parse_axiom( a.axiom ) );
    } else {
        const int k = a.kappa > 0 ? a.kappa : static_cast< int >( g.part_sizes().size() );
        bundle = gen_multicolored_wjr( g, k );
    }
    if ( !a.election_out.empty() )
        write_file( a.election_out, election_to_json( bundle->election ) );
    if ( !a.outcome_out.empty() )
        write_file( a.outcome_out, outcome_to_json( bundle->outcome ) );
    emit( a.output, bundle_to_json( *bundle ), out );
    return exit_ok;
}

} // namespace

int run_cli( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Temporal voting: justified-representation verification, EJR rules and reduction instances", "tjr" };
    app.require_subcommand( 1 );

    VerifyArgs va;
    auto* verify = app.add_subcommand( "verify", "Check whether an outcome provides an axiom" );
    verify->add_option( "--election", va.election, "Election JSON" )->required();
    verify->add_option( "--outcome", va.outcome, "Outcome JSON" )->required();
    verify->add_option( "--axiom", va.axiom, "jr, pjr or ejr" )->required();
    verify->add_flag( "--weak", va.weak, "Weak variant (groups agreeing in every round)" );
    verify->add_option( "--method", va.method,
                        "route, bruteforce, enumerative, monotonic, two-candidate-wjr, two-candidate-jr-nonempty" );
    verify->add_option( "--budget-n", va.budget_n, "Brute-force voter cap" );
    verify->add_option( "--budget-enum", va.budget_enum, "Enumerative (T, o') pair budget" );
    verify->add_option( "-o,--output", va.output, "Write the report here" );

    SolveArgs sa;
    auto* solve = app.add_subcommand( "solve", "Compute an EJR outcome" );
    solve->add_option( "--election", sa.election, "Election JSON" )->required();
    solve->add_option( "--rule", sa.rule, "gcr, gcr-mono or ilp" )->required();
    solve->add_flag( "--max-welfare", sa.max_welfare, "ILP: maximise total satisfaction" );
    solve->add_option( "--floors", sa.floors, "ILP: JSON array of per-voter satisfaction floors" );
    solve->add_option( "--emit-lp", sa.emit_lp_path, "ILP: also write the model as an LP file" );
    solve->add_option( "--trace", sa.trace, "GCR: write the selected cohesive groups as JSON" );
    solve->add_option( "--budget-n", sa.budget_n, "Voter cap for gcr and the ILP model" );
    solve->add_option( "--budget-nodes", sa.budget_nodes, "ILP search node budget" );
    solve->add_option( "-o,--output", sa.output, "Write the result here" );

    std::string gen_out;
    auto* gen = app.add_subcommand( "gen", "Generate an election" );
    gen->require_subcommand( 1 );
    gen->add_option( "-o,--output", gen_out, "Write the election here" );
    auto* gen_example = gen->add_subcommand( "example1", "Six voters, 21 candidates, three rounds" );
    gen_example->fallthrough();
    int semionline_k = 4;
    auto* gen_semi = gen->add_subcommand( "semionline", "Semi-online EJR counterexample" );
    gen_semi->fallthrough();
    gen_semi->add_option( "--k", semionline_k, "Half the number of voters (>= 4)" )->required();
    std::uint64_t seed = 1;
    int rn = 0;
    int rm = 0;
    int rell = 0;
    double density = 0.5;
    auto* gen_rand = gen->add_subcommand( "random", "Independent random approvals" );
    gen_rand->fallthrough();
    gen_rand->add_option( "--seed", seed, "PRNG seed" );
    gen_rand->add_option( "--n", rn, "Voters" )->required();
    gen_rand->add_option( "--m", rm, "Candidates" )->required();
    gen_rand->add_option( "--ell", rell, "Rounds" )->required();
    gen_rand->add_option( "--density", density, "Approval probability" )->required();

    ReduceArgs ra;
    std::string reduce_kind;
    auto* reduce = app.add_subcommand( "reduce", "Build a hardness-reduction instance from a graph" );
    reduce->add_option( "kind", reduce_kind, "clique, is3, biclique or mcc" )
        ->required()
        ->check( CLI::IsMember( { "clique", "is3", "biclique", "mcc" } ) );
    reduce->add_option( "--graph", ra.graph, "Graph file" )->required();
    reduce->add_option( "--kappa", ra.kappa, "Target size (mcc: number of parts, optional)" );
    reduce->add_flag( "--pad", ra.pad, "biclique: give every empty set a private candidate" );
    reduce->add_flag( "--blowup", ra.blow_up, "biclique: apply the vertex blow-up first" );
    reduce->add_option( "--axiom", ra.axiom, "biclique: jr, pjr or ejr" );
    reduce->add_option( "--election-out", ra.election_out, "Also write the election JSON" );
    reduce->add_option( "--outcome-out", ra.outcome_out, "Also write the outcome JSON" );
    reduce->add_option( "-o,--output", ra.output, "Write the bundle here" );

    CheckOptions co;
    auto* selfcheck = app.add_subcommand( "selfcheck", "Run the bundled acceptance suite" );
    selfcheck->add_flag( "--quick", co.quick, "Reduced sizes" );
    selfcheck->add_option( "--seed", co.seed, "Seed for the randomized sweeps" );

    try {
        std::vector< std::string > reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    } catch ( const CLI::CallForHelp& e ) {
        return app.exit( e, out, err );
    } catch ( const CLI::CallForAllHelp& e ) {
        return app.exit( e, out, err );
    } catch ( const CLI::ParseError& e ) {
        app.exit( e, out, err );
        return exit_input;
    }

    try {
        if ( verify->parsed() )
            return cmd_verify( va, out );
        if ( solve->parsed() )
            return cmd_solve( sa, out );
        if ( gen->parsed() ) {
            if ( gen_example->parsed() )
                emit( gen_out, election_to_json( gen_example1() ), out );
            else if ( gen_semi->parsed() )
                emit( gen_out, election_to_json( gen_semionline( semionline_k ) ), out );
            else if ( gen_rand->parsed() )
                emit( gen_out, election_to_json( gen_random( seed, rn, rm, rell, density ) ), out );
            return exit_ok;
        }
        if ( reduce->parsed() )
            return cmd_reduce( reduce_kind, ra, out );
        if ( selfcheck->parsed() )
            return run_checks( co, out ) ? exit_ok : exit_violated;
    } catch ( const InputError& e ) {
        err << "input error: " << e.what() << '\n';
        return exit_input;
    } catch ( const PreconditionError& e ) {
        err << "precondition error: " << e.what() << '\n';
        return exit_input;
    } catch ( const CapacityError& e ) {
        err << "capacity error: " << e.what() << '\n';
        return exit_capacity;
    }
    return exit_input;
}

} // namespace tjr::app
