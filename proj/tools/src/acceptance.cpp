#include "tjr_app/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "tjr/ejr_ilp.hpp"
#include "tjr/generators.hpp"
#include "tjr/io.hpp"
#include "tjr/rules.hpp"
#include "tjr/verify.hpp"
#include "tjr_app/cli.hpp"

namespace tjr::app
{

namespace
{

using Rng = std::mt19937_64;

int pick( Rng& rng, int lo, int hi )
{
    return lo + static_cast< int >( rng() % static_cast< std::uint64_t >( hi - lo + 1 ) );
}

Election random_election( Rng& rng, int max_n, int max_m, int max_ell )
{
    const int n = pick( rng, 1, max_n );
    const int m = pick( rng, 1, max_m );
    const int ell = pick( rng, 1, max_ell );
    const double density = pick( rng, 1, 9 ) / 10.0;
    return gen_random( rng(), n, m, ell, density );
}

// Static or growing approval sets.
Election random_monotonic( Rng& rng, int max_n, int max_m, int max_ell )
{
    const Election base = random_election( rng, max_n, max_m, max_ell );
    const bool static_prefs = rng() % 2 == 0;
    ElectionBuilder b( base.voters(), base.candidates(), base.rounds() );
    for ( int i = 0; i < base.voters(); ++i ) {
        std::vector< int > acc;
        for ( int t = 0; t < base.rounds(); ++t ) {
            if ( !static_prefs || t == 0 )
                for ( int p : base.approval_set( i, t ) )
                    if ( std::find( acc.begin(), acc.end(), p ) == acc.end() )
                        acc.push_back( p );
            b.set( i, t, acc );
        }
    }
    return b.build();
}

Outcome random_outcome( Rng& rng, const Election& e )
{
    std::vector< int > choices;
    for ( int t = 0; t < e.rounds(); ++t )
        choices.push_back( pick( rng, 0, e.candidates() - 1 ) );
    return Outcome( std::move( choices ) );
}

std::string describe( const Election& e, const Outcome& o )
{
    return "election " + election_to_json( e ).substr( 0, 200 ) + " outcome " + outcome_to_json( o );
}

// Compares every applicable specialized verifier with brute force on all six
// specs. Empty string means agreement.
std::string compare_verifiers( const Election& e, const Outcome& o, std::uint64_t& comparisons )
{
    const bool monotonic = is_monotonic( e );
    const bool two = two_candidate_rounds( e, o );
    const bool nonempty = all_nonempty( e );
    for ( const auto spec : all_axiom_specs ) {
        const auto truth = verify_bruteforce( e, o, spec );
        if ( truth.witness && !is_valid_witness( e, o, spec, *truth.witness ) )
            return "bruteforce witness invalid for " + to_string( spec ) + " on " + describe( e, o );

        auto compare = [ & ]( const VerifyReport& r ) -> std::string {
            ++comparisons;
            if ( r.holds != truth.holds )
                return std::string( to_string( r.method ) ) + " disagrees on " + to_string( spec ) + " for "
                       + describe( e, o );
            if ( r.witness && !is_valid_witness( e, o, spec, *r.witness ) )
                return std::string( to_string( r.method ) ) + " witness invalid on " + to_string( spec ) + " for "
                       + describe( e, o );
            return {};
        };
        if ( auto msg = compare( verify_enumerative( e, o, spec ) ); !msg.empty() )
            return msg;
        if ( monotonic )
            if ( auto msg = compare( verify_monotonic( e, o, spec ) ); !msg.empty() )
                return msg;
        if ( two && spec == AxiomSpec{ Axiom::jr, Strength::weak } )
            if ( auto msg = compare( verify_two_candidates_wjr( e, o ) ); !msg.empty() )
                return msg;
        if ( two && nonempty && spec == AxiomSpec{ Axiom::jr, Strength::strong } )
            if ( auto msg = compare( verify_two_candidates_jr_nonempty( e, o ) ); !msg.empty() )
                return msg;
    }
    return {};
}

std::vector< Outcome > all_outcomes( const Election& e )
{
    std::vector< Outcome > out;
    std::vector< int > choice( static_cast< std::size_t >( e.rounds() ), 0 );
    while ( true ) {
        out.emplace_back( choice );
        std::size_t t = choice.size();
        while ( true ) {
            if ( t == 0 )
                return out;
            --t;
            if ( ++choice[ t ] < e.candidates() )
                break;
            choice[ t ] = 0;
        }
    }
}

CheckResult check_oracle_equivalence( const CheckOptions& opt )
{
    CheckResult r;
    std::uint64_t elections = 0;
    std::uint64_t comparisons = 0;
    const int max_n = opt.quick ? 3 : 4;
    for ( int n = 1; n <= max_n; ++n )
        for ( int m = 1; m <= 2; ++m )
            for ( int ell = 1; ell <= 2; ++ell ) {
                const int cells = n * ell;
                const std::uint64_t subsets = std::uint64_t{ 1 } << m;
                std::uint64_t total = 1;
                for ( int c = 0; c < cells; ++c )
                    total *= subsets;
                for ( std::uint64_t code = 0; code < total; ++code ) {
                    ElectionBuilder b( n, m, ell );
                    auto rest = code;
                    for ( int i = 0; i < n; ++i )
                        for ( int t = 0; t < ell; ++t ) {
                            const auto set = rest % subsets;
                            rest /= subsets;
                            for ( int p = 0; p < m; ++p )
                                if ( set >> p & 1U )
                                    b.approve( i, t, p );
                        }
                    const Election e = b.build();
                    ++elections;
                    for ( const auto& o : all_outcomes( e ) )
                        if ( auto msg = compare_verifiers( e, o, comparisons ); !msg.empty() ) {
                            r.detail = msg;
                            return r;
                        }
                }
            }

    Rng rng( opt.seed );
    const int samples = opt.quick ? 100 : 1000;
    for ( int s = 0; s < samples; ++s ) {
        const Election e = random_election( rng, 6, 4, 5 );
        const Outcome o = random_outcome( rng, e );
        ++elections;
        if ( auto msg = compare_verifiers( e, o, comparisons ); !msg.empty() ) {
            r.detail = msg;
            return r;
        }
    }
    r.passed = true;
    r.detail = std::to_string( elections ) + " elections, " + std::to_string( comparisons )
               + " verifier comparisons, 100% agreement";
    return r;
}

CheckResult check_gcr( const CheckOptions& opt )
{
    CheckResult r;
    Rng rng( opt.seed + 1 );
    const int samples = opt.quick ? 100 : 500;
    const AxiomSpec ejr{ Axiom::ejr, Strength::strong };
    int gcr_ok = 0;
    int mono_ok = 0;
    for ( int s = 0; s < samples; ++s ) {
        const Election e = random_election( rng, 6, 4, 5 );
        if ( verify_bruteforce( e, gcr( e ).outcome, ejr ).holds )
            ++gcr_ok;
        else if ( r.detail.empty() )
            r.detail = "gcr fails EJR on " + election_to_json( e );
    }
    for ( int s = 0; s < samples; ++s ) {
        const Election e = random_monotonic( rng, 6, 4, 5 );
        if ( verify_bruteforce( e, gcr_monotonic( e ).outcome, ejr ).holds )
            ++mono_ok;
        else if ( r.detail.empty() )
            r.detail = "gcr-mono fails EJR on " + election_to_json( e );
    }
    r.passed = gcr_ok == samples && mono_ok == samples;
    const std::string counts = "gcr " + std::to_string( gcr_ok ) + "/" + std::to_string( samples ) + ", gcr-mono "
                               + std::to_string( mono_ok ) + "/" + std::to_string( samples );
    r.detail = r.detail.empty() ? counts : counts + "; " + r.detail;
    return r;
}

CheckResult check_ilp( const CheckOptions& opt )
{
    CheckResult r;
    Rng rng( opt.seed + 2 );
    const int samples = opt.quick ? 40 : 200;
    const AxiomSpec ejr{ Axiom::ejr, Strength::strong };
    int sound = 0;
    int dominates = 0;
    int optimal = 0;
    int gcr_optimal = 0;
    int agree_when_gcr_optimal = 0;
    std::string first_failure;
    for ( int s = 0; s < samples; ++s ) {
        const Election e = random_election( rng, 5, 3, 4 );
        const auto plain = solve_ejr( e );
        const auto best = solve_ejr( e, EjrModelOptions{ std::nullopt, true } );
        if ( plain.outcome && verify_bruteforce( e, *plain.outcome, ejr ).holds && best.outcome
             && verify_bruteforce( e, *best.outcome, ejr ).holds )
            ++sound;
        else if ( first_failure.empty() )
            first_failure = "ILP outcome missing or not EJR on " + election_to_json( e );

        const auto gcr_welfare = welfare( e, gcr( e ).outcome );
        if ( best.welfare >= gcr_welfare )
            ++dominates;
        else if ( first_failure.empty() )
            first_failure = "ILP welfare below gcr on " + election_to_json( e );

        // m^ell <= 3^4 here, always within the exhaustive limit
        std::int64_t exhaustive = -1;
        for ( const auto& o : all_outcomes( e ) )
            if ( verify_bruteforce( e, o, ejr ).holds )
                exhaustive = std::max( exhaustive, welfare( e, o ) );
        if ( best.welfare == exhaustive )
            ++optimal;
        else if ( first_failure.empty() )
            first_failure = "ILP welfare " + std::to_string( best.welfare ) + " but exhaustive optimum "
                            + std::to_string( exhaustive ) + " on " + election_to_json( e );
        if ( gcr_welfare == exhaustive ) {
            ++gcr_optimal;
            if ( best.welfare == gcr_welfare )
                ++agree_when_gcr_optimal;
        }
    }
    r.passed = sound == samples && dominates == samples && optimal == samples
               && agree_when_gcr_optimal == gcr_optimal;
    std::ostringstream d;
    d << "EJR " << sound << "/" << samples << ", welfare >= gcr " << dominates << "/" << samples
      << ", equals exhaustive optimum " << optimal << "/" << samples << ", gcr optimal in " << gcr_optimal
      << " and matched in " << agree_when_gcr_optimal;
    if ( !first_failure.empty() )
        d << "; " << first_failure;
    r.detail = d.str();
    return r;
}

std::vector< Graph > all_graphs( int nu )
{
    std::vector< Graph::Edge > pairs;
    for ( int u = 0; u < nu; ++u )
        for ( int v = u + 1; v < nu; ++v )
            pairs.emplace_back( u, v );
    std::vector< Graph > out;
    for ( std::uint32_t mask = 0; mask < ( 1U << pairs.size() ); ++mask ) {
        std::vector< Graph::Edge > edges;
        for ( std::size_t k = 0; k < pairs.size(); ++k )
            if ( mask >> k & 1U )
                edges.push_back( pairs[ k ] );
        out.emplace_back( nu, std::move( edges ) );
    }
    return out;
}

Graph random_degree3_graph( Rng& rng, int nu )
{
    std::vector< Graph::Edge > pairs;
    for ( int u = 0; u < nu; ++u )
        for ( int v = u + 1; v < nu; ++v )
            pairs.emplace_back( u, v );
    std::shuffle( pairs.begin(), pairs.end(), rng );
    std::vector< int > degree( static_cast< std::size_t >( nu ), 0 );
    std::vector< Graph::Edge > edges;
    for ( auto [ u, v ] : pairs )
        if ( rng() % 2 == 0 && degree[ static_cast< std::size_t >( u ) ] < 3
             && degree[ static_cast< std::size_t >( v ) ] < 3 ) {
            ++degree[ static_cast< std::size_t >( u ) ];
            ++degree[ static_cast< std::size_t >( v ) ];
            edges.emplace_back( u, v );
        }
    return Graph( nu, std::move( edges ) );
}

struct Tally
{
    int cases = 0;
    int agree = 0;
    std::string first_failure;

    void record( bool ok, const std::string& what )
    {
        ++cases;
        if ( ok )
            ++agree;
        else if ( first_failure.empty() )
            first_failure = what;
    }
};

CheckResult check_reductions( const CheckOptions& opt )
{
    CheckResult r;
    Tally clique;
    Tally is3;
    Tally biclique;
    Tally mcc;

    // (a) clique -> w-JR: route always (n reaches 25), brute force too while n <= 16
    const int max_nu = opt.quick ? 4 : 5;
    for ( int nu = 1; nu <= max_nu; ++nu )
        for ( const auto& g : all_graphs( nu ) )
            for ( int kappa = 1; kappa <= nu; ++kappa ) {
                const auto b = gen_clique_wjr( g, kappa );
                const bool expected = has_clique( g, kappa );
                const bool fails = !route( b.election, b.outcome, b.spec ).holds;
                bool ok = fails == expected;
                if ( b.election.voters() <= 16 )
                    ok = ok && !verify_bruteforce( b.election, b.outcome, b.spec ).holds == expected;
                clique.record( ok, "clique kappa=" + std::to_string( kappa ) + " graph " + graph_to_text( g ) );
            }

    // (b) IS-3 -> w-EJR on random max-degree-3 graphs with nu = 7
    Rng rng( opt.seed + 3 );
    const int is3_graphs = opt.quick ? 40 : 200;
    for ( int s = 0; s < is3_graphs; ++s ) {
        const Graph g = random_degree3_graph( rng, 7 );
        for ( int kappa = 1; kappa <= 4; ++kappa ) {
            const auto b = gen_is3_wejr( g, kappa );
            const bool fails = !verify_bruteforce( b.election, b.outcome, b.spec ).holds;
            is3.record( fails == has_independent_set( g, kappa ),
                        "is3 kappa=" + std::to_string( kappa ) + " graph " + graph_to_text( g ) );
        }
    }

    // (c) biclique -> JR/PJR/EJR; |L| = 3, |R| = 2, kappa = 6 is the only shape
    // with |L||R| > |L| + |R| inside the range
    for ( int left = 1; left <= 3; ++left )
        for ( int right = 1; right <= 2; ++right ) {
            const int kappa = left * right;
            if ( kappa <= left + right )
                continue;
            for ( std::uint32_t mask = 0; mask < ( 1U << ( left * right ) ); ++mask ) {
                std::vector< Graph::Edge > edges;
                for ( int l = 0; l < left; ++l )
                    for ( int q = 0; q < right; ++q )
                        if ( mask >> ( l * right + q ) & 1U )
                            edges.emplace_back( l, left + q );
                const Graph g = Graph::bipartite( left, right, edges );
                const bool expected = has_biclique_edges( g, kappa );
                for ( bool pad : { false, true } )
                    for ( Axiom axiom : { Axiom::jr, Axiom::pjr, Axiom::ejr } ) {
                        const auto b = gen_biclique_jr( g, kappa, pad, axiom );
                        const bool fails = !verify_bruteforce( b.election, b.outcome, b.spec ).holds;
                        const bool ok = fails == expected && ( !pad || all_nonempty( b.election ) );
                        biclique.record( ok, "biclique pad=" + std::to_string( pad ) + " axiom="
                                                 + std::string( to_string( axiom ) ) + " graph " + graph_to_text( g ) );
                    }
            }
        }

    // (d) multicolored clique, k = 3, one or two vertices per part
    for ( int code = 0; code < 8; ++code ) {
        const std::vector< int > sizes{ 1 + ( code & 1 ), 1 + ( code >> 1 & 1 ), 1 + ( code >> 2 & 1 ) };
        const Graph shape = Graph::multipartite( sizes, {} );
        std::vector< Graph::Edge > pairs;
        for ( int u = 0; u < shape.vertices(); ++u )
            for ( int v = u + 1; v < shape.vertices(); ++v )
                if ( shape.part_of( u ) != shape.part_of( v ) )
                    pairs.emplace_back( u, v );
        const std::uint32_t limit = opt.quick ? std::min< std::uint32_t >( 1U << pairs.size(), 256 )
                                              : ( 1U << pairs.size() );
        for ( std::uint32_t mask = 0; mask < limit; ++mask ) {
            std::vector< Graph::Edge > edges;
            for ( std::size_t k = 0; k < pairs.size(); ++k )
                if ( mask >> k & 1U )
                    edges.push_back( pairs[ k ] );
            const Graph g = Graph::multipartite( sizes, std::move( edges ) );
            const auto b = gen_multicolored_wjr( g, 3 );
            const bool fails = !verify_bruteforce( b.election, b.outcome, b.spec ).holds;
            mcc.record( fails == has_multicolored_clique( g ), "mcc graph " + graph_to_text( g ) );
        }
    }

    std::ostringstream d;
    std::string failure;
    bool all = true;
    for ( const auto& [ name, t ] : { std::pair< const char*, const Tally* >{ "clique", &clique },
                                      { "is3", &is3 },
                                      { "biclique", &biclique },
                                      { "mcc", &mcc } } ) {
        d << ( d.tellp() > 0 ? ", " : "" ) << name << ' ' << t->agree << '/' << t->cases;
        all = all && t->agree == t->cases && t->cases > 0;
        if ( failure.empty() )
            failure = t->first_failure;
    }
    r.passed = all;
    r.detail = d.str() + ( failure.empty() ? "" : "; first failure: " + failure );
    return r;
}

CheckResult check_example1( const CheckOptions& )
{
    CheckResult r;
    const Election e = gen_example1();
    const int n = e.voters();

    // beta profile: 3 for singletons, 1 for pairs, 0 beyond
    bool profile_ok = true;
    std::vector< std::uint64_t > alt_positive;
    for ( std::uint64_t mask = 1; mask < ( std::uint64_t{ 1 } << n ); ++mask ) {
        const auto g = VoterGroup::from_mask( mask );
        const int expected = g.size() == 1 ? 3 : g.size() == 2 ? 1 : 0;
        profile_ok = profile_ok && agreement( e, g ) == expected && demand( e, g ) == 0;
        if ( alt_demand( e, g ) >= 1 )
            alt_positive.push_back( mask );
    }

    std::uint64_t outcomes = 0;
    std::uint64_t ejr_holds = 0;
    std::uint64_t alt_jr_holds = 0;
    for ( const auto& o : all_outcomes( e ) ) {
        ++outcomes;
        if ( verify_bruteforce( e, o, { Axiom::ejr, Strength::strong } ).holds )
            ++ejr_holds;
        std::uint64_t satisfied = 0;
        const auto sat = satisfactions( e, o );
        for ( int i = 0; i < n; ++i )
            if ( sat[ static_cast< std::size_t >( i ) ] > 0 )
                satisfied |= std::uint64_t{ 1 } << i;
        const bool alt_ok = std::all_of( alt_positive.begin(), alt_positive.end(),
                                         [ & ]( std::uint64_t g ) { return ( g & satisfied ) != 0; } );
        if ( alt_ok )
            ++alt_jr_holds;
    }
    r.passed = profile_ok && outcomes == 21 * 21 * 21 && ejr_holds == outcomes && alt_jr_holds == 0;
    r.detail = std::to_string( outcomes ) + " outcomes, EJR holds in " + std::to_string( ejr_holds )
               + ", JR with the alternative demand holds in " + std::to_string( alt_jr_holds )
               + ( profile_ok ? ", agreement profile 3/1/0" : ", agreement profile WRONG" );
    return r;
}

CheckResult check_semionline( const CheckOptions& )
{
    CheckResult r;
    const auto sweep = semionline_sweep( 4 );
    const Election e = gen_semionline( 4 );
    const bool gcr_ejr = verify_bruteforce( e, gcr( e ).outcome, { Axiom::ejr, Strength::strong } ).holds;
    r.passed = sweep.all_fail && sweep.completions == 4096 && sweep.failing == 4096 && gcr_ejr;
    r.detail = std::to_string( sweep.failing ) + "/" + std::to_string( sweep.completions )
               + " completions fail strong EJR (" + std::to_string( sweep.failing_restricted )
               + " caught by the singleton and first-half groups); gcr outcome "
               + ( gcr_ejr ? "provides" : "does NOT provide" ) + " EJR";
    return r;
}

std::uint64_t fnv1a( std::string_view text )
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for ( unsigned char c : text ) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

CheckResult check_determinism( const CheckOptions& opt )
{
    CheckResult r;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ( "tjr-selfcheck-" + std::to_string( fnv1a( std::to_string(
                                                                              opt.seed ) + std::to_string(
                                                                              std::chrono::steady_clock::now()
                                                                                  .time_since_epoch()
                                                                                  .count() ) ) ) );
    fs::create_directories( dir );
    auto path = [ & ]( const char* name ) { return ( dir / name ).string(); };

    write_file( path( "triangle.txt" ), "3 3\n1 2\n2 3\n1 3\n" );
    write_file( path( "path7.txt" ), "7 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n" );
    write_file( path( "k32.txt" ), "5 6 bipartite 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n" );
    write_file( path( "tri3.txt" ), "3 3 parts 3 1 1 1\n1 2\n1 3\n2 3\n" );
    write_file( path( "floors.json" ), "[1, 1, 1, 1]\n" );

    using Args = std::vector< std::string >;
    struct Step
    {
        Args args;
        std::vector< std::string > files; // outputs to hash besides stdout
        int expected_exit;
    };
    const std::vector< Step > steps{
        { { "gen", "example1", "-o", path( "ex1.json" ) }, { path( "ex1.json" ) }, exit_ok },
        { { "gen", "semionline", "--k", "4" }, {}, exit_ok },
        { { "gen", "random", "--seed", "7", "--n", "4", "--m", "3", "--ell", "4", "--density", "0.4", "-o",
            path( "rand.json" ) },
          { path( "rand.json" ) },
          exit_ok },
        { { "reduce", "clique", "--graph", path( "triangle.txt" ), "--kappa", "3", "--election-out",
            path( "clique_e.json" ), "--outcome-out", path( "clique_o.json" ) },
          { path( "clique_e.json" ), path( "clique_o.json" ) },
          exit_ok },
        { { "verify", "--election", path( "clique_e.json" ), "--outcome", path( "clique_o.json" ), "--axiom", "jr",
            "--weak" },
          {},
          exit_violated },
        { { "reduce", "is3", "--graph", path( "path7.txt" ), "--kappa", "4" }, {}, exit_ok },
        { { "reduce", "biclique", "--graph", path( "k32.txt" ), "--kappa", "6", "--pad" }, {}, exit_ok },
        { { "reduce", "mcc", "--graph", path( "tri3.txt" ) }, {}, exit_ok },
        { { "solve", "--election", path( "ex1.json" ), "--rule", "gcr", "--trace", path( "trace.json" ), "-o",
            path( "ex1_o.json" ) },
          { path( "trace.json" ), path( "ex1_o.json" ) },
          exit_ok },
        { { "verify", "--election", path( "ex1.json" ), "--outcome", path( "ex1_o.json" ), "--axiom", "ejr" },
          {},
          exit_ok },
        { { "solve", "--election", path( "rand.json" ), "--rule", "ilp", "--max-welfare", "--floors",
            path( "floors.json" ), "--emit-lp", path( "model.lp" ) },
          { path( "model.lp" ) },
          -1 },
        { { "solve", "--election", path( "rand.json" ), "--rule", "gcr" }, {}, exit_ok },
    };

    int stable = 0;
    std::string failure;
    for ( const auto& step : steps ) {
        std::uint64_t hashes[ 2 ] = { 0, 0 };
        int codes[ 2 ] = { 0, 0 };
        for ( int run = 0; run < 2; ++run ) {
            std::ostringstream out;
            std::ostringstream err;
            codes[ run ] = run_cli( step.args, out, err );
            std::uint64_t h = fnv1a( out.str() ) ^ ( fnv1a( err.str() ) * 31 );
            for ( const auto& f : step.files )
                h = h * 1099511628211ULL ^ fnv1a( read_file( f ) );
            hashes[ run ] = h;
        }
        const bool exit_ok_here = step.expected_exit < 0 || codes[ 0 ] == step.expected_exit;
        if ( hashes[ 0 ] == hashes[ 1 ] && codes[ 0 ] == codes[ 1 ] && exit_ok_here )
            ++stable;
        else if ( failure.empty() ) {
            failure = "tjr";
            for ( const auto& a : step.args )
                failure += " " + a;
            failure += " (exit " + std::to_string( codes[ 0 ] ) + "/" + std::to_string( codes[ 1 ] ) + ")";
        }
    }
    std::error_code ignored;
    fs::remove_all( dir, ignored );
    r.passed = stable == static_cast< int >( steps.size() );
    r.detail = std::to_string( stable ) + "/" + std::to_string( steps.size() )
               + " commands byte-identical across reruns" + ( failure.empty() ? "" : "; unstable: " + failure );
    return r;
}

} // namespace

std::vector< Check > acceptance_checks()
{
    return {
        { "1 oracle-equivalence", 60.0, check_oracle_equivalence },
        { "2 gcr-soundness", 60.0, check_gcr },
        { "3 ilp-soundness-optimality", 120.0, check_ilp },
        { "4 reduction-equivalences", 120.0, check_reductions },
        { "5 example1", 30.0, check_example1 },
        { "6 semionline-impossibility", 30.0, check_semionline },
        { "7 determinism", 60.0, check_determinism },
    };
}

bool run_checks( const CheckOptions& options, std::ostream& out )
{
    bool all = true;
    for ( const auto& check : acceptance_checks() ) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result;
        try {
            result = check.run( options );
        } catch ( const std::exception& e ) {
            result.passed = false;
            result.detail = std::string( "exception: " ) + e.what();
        }
        result.seconds = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
        if ( result.seconds > check.time_limit_seconds ) {
            result.passed = false;
            result.detail += "; exceeded the " + std::to_string( static_cast< int >( check.time_limit_seconds ) )
                             + " s limit";
        }
        all = all && result.passed;
        out << ( result.passed ? "PASS " : "FAIL " ) << check.name << " (" << std::fixed << std::setprecision( 2 )
            << result.seconds << " s): " << result.detail << std::endl;
    }
    return all;
}

} // namespace tjr::app
