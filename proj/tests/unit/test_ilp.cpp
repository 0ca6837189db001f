#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "support.hpp"
#include "tjr/ejr_ilp.hpp"
#include "tjr/errors.hpp"
#include "tjr/generators.hpp"
#include "tjr/rules.hpp"
#include "tjr/verify.hpp"

using namespace tjr;
using namespace tjr::test;

namespace
{

constexpr AxiomSpec ejr{ Axiom::ejr, Strength::strong };

// Minimal reader for the LP text we emit: enough to recount rows, bounds
// and integer declarations without sharing code with the writer.
struct ParsedLp
{
    bool maximize = false;
    std::map< std::string, std::int64_t > objective;
    struct Constraint
    {
        std::map< std::string, std::int64_t > terms;
        std::string op;
        std::int64_t rhs = 0;
    };
    std::map< std::string, Constraint > rows;
    std::vector< std::string > row_order;
    std::map< std::string, std::pair< std::int64_t, std::int64_t > > bounds;
    std::vector< std::string > generals;
    bool ended = false;
};

void parse_terms( std::istringstream& in, std::map< std::string, std::int64_t >& terms, std::string& stop )
{
    std::int64_t sign = 1;
    std::int64_t coef = 1;
    bool have_coef = false;
    std::string tok;
    while ( in >> tok ) {
        if ( tok == "+" ) {
            sign = 1;
        } else if ( tok == "-" ) {
            sign = -1;
        } else if ( tok == "<=" || tok == ">=" || tok == "=" ) {
            stop = tok;
            return;
        } else if ( std::isdigit( static_cast< unsigned char >( tok[ 0 ] ) ) ) {
            coef = std::stoll( tok );
            have_coef = true;
        } else {
            // a lone "0 x" is how an empty expression is written
            if ( ( terms[ tok ] += sign * ( have_coef ? coef : 1 ) ) == 0 )
                terms.erase( tok );
            sign = 1;
            coef = 1;
            have_coef = false;
        }
    }
}

ParsedLp parse_lp( const std::string& text )
{
    ParsedLp lp;
    std::istringstream in( text );
    std::string line;
    std::string section;
    std::string pending; // a constraint may wrap over several lines
    auto finish_row = [ & ]( const std::string& row ) {
        std::istringstream rs( row );
        std::string name;
        rs >> name;
        name.pop_back(); // trailing ':'
        ParsedLp::Constraint c;
        parse_terms( rs, c.terms, c.op );
        rs >> c.rhs;
        lp.rows[ name ] = c;
        lp.row_order.push_back( name );
    };
    while ( std::getline( in, line ) ) {
        if ( line == "Maximize" || line == "Minimize" || line == "Subject To" || line == "Bounds" || line == "Generals"
             || line == "End" ) {
            if ( !pending.empty() ) {
                finish_row( pending );
                pending.clear();
            }
            section = line;
            if ( line == "Maximize" )
                lp.maximize = true;
            if ( line == "End" )
                lp.ended = true;
            continue;
        }
        if ( section == "Maximize" || section == "Minimize" ) {
            std::istringstream ls( line );
            std::string label;
            if ( line.rfind( "   ", 0 ) != 0 )
                ls >> label;
            std::string stop;
            parse_terms( ls, lp.objective, stop );
        } else if ( section == "Subject To" ) {
            if ( line.rfind( "   ", 0 ) == 0 ) {
                pending += " " + line;
            } else {
                if ( !pending.empty() )
                    finish_row( pending );
                pending = line;
            }
        } else if ( section == "Bounds" ) {
            std::istringstream ls( line );
            std::int64_t lo = 0;
            std::int64_t hi = 0;
            std::string le1;
            std::string var;
            std::string le2;
            ls >> lo >> le1 >> var >> le2 >> hi;
            lp.bounds[ var ] = { lo, hi };
        } else if ( section == "Generals" ) {
            std::istringstream ls( line );
            std::string var;
            while ( ls >> var )
                lp.generals.push_back( var );
        }
    }
    return lp;
}

std::string op_of( Sense s )
{
    return s == Sense::le ? "<=" : s == Sense::ge ? ">=" : "=";
}

} // namespace

TEST( LinearModel, FeasibilityAndObjective )
{
    LinearModel lp;
    const int x = lp.add_variable( "x", 0, 3 );
    const int y = lp.add_variable( "y", 0, 3 );
    lp.add_row( "sum", { { x, 1 }, { y, 1 } }, Sense::le, 4 );
    lp.add_row( "diff", { { x, 1 }, { y, -1 } }, Sense::ge, 1 );
    lp.set_objective( { true, { { x, 1 }, { y, 2 } } } );
    const std::vector< std::int64_t > ok{ 3, 1 };
    const std::vector< std::int64_t > bad{ 1, 3 };
    EXPECT_TRUE( lp.is_feasible( ok ) );
    EXPECT_FALSE( lp.is_feasible( bad ) );
    EXPECT_EQ( lp.objective_value( ok ), 5 );
    const auto r = solve_exact( lp );
    EXPECT_EQ( r.status, SolveStatus::optimal );
    // x - y >= 1, x + y <= 4: best is x = 3, y = 1 (5) vs x = 2, y = 1 (4)
    EXPECT_EQ( r.objective, 5 );
    EXPECT_EQ( r.values, ok );
}

TEST( LinearModel, RejectsBadDefinitions )
{
    LinearModel lp;
    EXPECT_THROW( (void)lp.add_variable( "x", 2, 1 ), InputError );
    const int x = lp.add_variable( "x", 0, 1 );
    EXPECT_THROW( lp.add_row( "r", { { x + 1, 1 } }, Sense::le, 0 ), InputError );
}

TEST( LinearModel, InfeasibleAndBudget )
{
    LinearModel lp;
    const int x = lp.add_variable( "x", 0, 2 );
    lp.add_row( "r", { { x, 2 } }, Sense::eq, 3 );
    EXPECT_EQ( solve_exact( lp ).status, SolveStatus::infeasible );

    // an exhaustive search over a wide, unconstrained-looking model runs out of nodes
    LinearModel wide;
    std::vector< Term > sum;
    for ( int i = 0; i < 30; ++i )
        sum.push_back( { wide.add_variable( "v" + std::to_string( i ), 0, 1 ), 2 } );
    wide.add_row( "odd", sum, Sense::eq, 31 );
    EXPECT_THROW( (void)solve_exact( wide, SolverConfig{ 1000 } ), CapacityError );
}

TEST( LinearModel, FirstFeasibleIsLexicographicallySmallest )
{
    LinearModel lp;
    const int a = lp.add_variable( "a", 0, 3 );
    const int b = lp.add_variable( "b", 0, 3 );
    lp.add_row( "r", { { a, 1 }, { b, 1 } }, Sense::eq, 3 );
    const auto r = solve_exact( lp );
    EXPECT_EQ( r.status, SolveStatus::feasible );
    EXPECT_EQ( r.values, ( std::vector< std::int64_t >{ 0, 3 } ) );
}

TEST( EjrModel, ForcedModel )
{
    const Election e( 2, 1, 2, Sets( 2, { { 0 }, { 0 } } ) );
    EjrModelOptions opts;
    opts.max_welfare = true;
    const auto model = build_model( e, opts );
    ASSERT_EQ( model.types.size(), 1U );
    EXPECT_EQ( model.types[ 0 ].count(), 2 );
    const auto r = solve_exact( model.lp );
    ASSERT_EQ( r.status, SolveStatus::optimal );
    EXPECT_EQ( r.values[ static_cast< std::size_t >( model.x[ 0 ][ 0 ] ) ], 2 );
    EXPECT_EQ( r.objective, 4 );
    EXPECT_EQ( decode( model, r.values ), Outcome( { 0, 0 } ) );
    EXPECT_NE( emit_lp( model.lp ).find( "x_1_t1 = 2" ), std::string::npos );
}

TEST( EjrModel, ExampleOneHasNoCohesiveRows )
{
    const Election e = gen_example1();
    const auto model = build_model( e );
    EXPECT_TRUE( model.groups.empty() );
    for ( const auto& row : model.lp.rows() )
        EXPECT_EQ( row.name.rfind( "type", 0 ), 0U ) << row.name;
    EXPECT_EQ( solve_ejr( e ).status, SolveStatus::feasible );
}

TEST( EjrModel, SemionlineWithUnitFloors )
{
    const Election e = gen_semionline( 4 );
    EjrModelOptions opts;
    opts.floors = std::vector< int >( 8, 1 );
    const auto out = solve_ejr( e, opts );
    ASSERT_NE( out.status, SolveStatus::infeasible );
    EXPECT_TRUE( verify_bruteforce( e, *out.outcome, ejr ).holds );
    for ( int i = 0; i < 8; ++i )
        EXPECT_GE( satisfaction( e, *out.outcome, i ), 1 );
}

TEST( EjrModel, InfeasibleFloors )
{
    // two voters with disjoint approvals in every round, each demanding every round
    const Election e( 2, 2, 3, { { { 0 }, { 0 }, { 0 } }, { { 1 }, { 1 }, { 1 } } } );
    EjrModelOptions opts;
    opts.floors = std::vector< int >{ 3, 3 };
    EXPECT_EQ( solve_ejr( e, opts ).status, SolveStatus::infeasible );
    opts.floors = std::vector< int >{ 3 };
    EXPECT_THROW( (void)build_model( e, opts ), InputError );
}

TEST( EjrModel, VoterCap )
{
    const Election e( 21, 1, 1, Sets( 21, { { 0 } } ) );
    EXPECT_THROW( (void)build_model( e ), CapacityError );
}

TEST( EjrModel, RoundTypesGroupIdenticalProfiles )
{
    // rounds 0 and 2 share a profile even though candidate labels differ
    const Election e( 2, 3, 3, { { { 0 }, { 1 }, { 2 } }, { { 1 }, { 1 }, { 0 } } } );
    const auto model = build_model( e );
    ASSERT_EQ( model.types.size(), 2U );
    EXPECT_EQ( model.types[ 0 ].rounds, ( std::vector< int >{ 0, 2 } ) );
    EXPECT_EQ( model.types[ 1 ].rounds, std::vector< int >{ 1 } );
    int per_type_rows = 0;
    for ( const auto& row : model.lp.rows() )
        if ( row.sense == Sense::eq )
            ++per_type_rows;
    EXPECT_EQ( per_type_rows, 2 );
}

TEST( EjrModel, DecodeUsesOriginalCandidates )
{
    // candidates 1 and 2 are clones; decoding must name one of the originals
    const Election e( 2, 3, 2, { { { 1, 2 }, { 1, 2 } }, { { 1, 2 }, { 1, 2 } } } );
    const auto out = solve_ejr( e );
    ASSERT_TRUE( out.outcome );
    for ( int c : out.outcome->choices() )
        EXPECT_TRUE( c == 1 || c == 2 );
}

TEST( EjrModel, SatisfactionExpressionMatchesDecodedOutcome )
{
    std::mt19937 rng( 31 );
    for ( int rep = 0; rep < 100; ++rep ) {
        const Raw r = random_raw( rng, 5, 3, 4 );
        const Election e = r.election();
        const auto model = build_model( e );
        const auto sol = solve_exact( model.lp );
        ASSERT_NE( sol.status, SolveStatus::infeasible );
        const Outcome o = decode( model, sol.values );
        const auto sat = model_satisfaction( model, sol.values );
        for ( int i = 0; i < r.n; ++i )
            EXPECT_EQ( sat[ static_cast< std::size_t >( i ) ], naive_sat( r, o.choices(), i ) );
        // per-type totals
        for ( std::size_t tau = 0; tau < model.types.size(); ++tau ) {
            std::int64_t total = 0;
            for ( int v : model.x[ tau ] )
                total += sol.values[ static_cast< std::size_t >( v ) ];
            EXPECT_EQ( total, model.types[ tau ].count() );
        }
    }
}

TEST( EjrModel, SoundExhaustiveTiny )
{
    // every election with n = 3, m = 2, ell = 2 over approval sets {}, {0}, {1}
    const std::vector< std::vector< int > > alphabet{ {}, { 0 }, { 1 }, { 0, 1 } };
    int count = 0;
    for ( int code = 0; code < 4096; code += 7 ) {
        Raw r;
        r.n = 3;
        r.m = 2;
        r.ell = 2;
        int c = code;
        for ( int i = 0; i < 3; ++i ) {
            r.sets.emplace_back();
            for ( int t = 0; t < 2; ++t ) {
                r.sets.back().push_back( alphabet[ static_cast< std::size_t >( c % 4 ) ] );
                c /= 4;
            }
        }
        const auto out = solve_ejr( r.election() );
        ASSERT_TRUE( out.outcome );
        EXPECT_TRUE( naive_holds( r, out.outcome->choices(), ejr ) );
        ++count;
    }
    EXPECT_GT( count, 500 );
}

TEST( EjrModel, SoundAndOptimalOnRandom )
{
    std::mt19937 rng( 32 );
    for ( int rep = 0; rep < 80; ++rep ) {
        const Raw r = random_raw( rng, 5, 3, 4 );
        const Election e = r.election();
        const auto plain = solve_ejr( e );
        ASSERT_TRUE( plain.outcome );
        EXPECT_TRUE( naive_holds( r, plain.outcome->choices(), ejr ) );

        EjrModelOptions opts;
        opts.max_welfare = true;
        const auto best = solve_ejr( e, opts );
        ASSERT_EQ( best.status, SolveStatus::optimal );
        EXPECT_TRUE( naive_holds( r, best.outcome->choices(), ejr ) );
        EXPECT_EQ( best.welfare, naive_best_ejr_welfare( r ) );
        EXPECT_GE( best.welfare, welfare( e, gcr( e ).outcome ) );

        // the gcr outcome is an assignment of the plain model
        const auto model = build_model( e );
        const auto enc = encode( model, e, gcr( e ).outcome );
        ASSERT_TRUE( enc );
        EXPECT_TRUE( model.lp.is_feasible( *enc ) );
        EXPECT_EQ( decode( model, *enc ).choices().size(), static_cast< std::size_t >( r.ell ) );
    }
}

TEST( EmitLp, DeterministicAndStructurallyFaithful )
{
    std::mt19937 rng( 33 );
    for ( int rep = 0; rep < 40; ++rep ) {
        const Raw r = random_raw( rng, 5, 3, 4 );
        const Election e = r.election();
        EjrModelOptions opts;
        opts.max_welfare = rep % 2 == 0;
        if ( rep % 3 == 0 )
            opts.floors = std::vector< int >( static_cast< std::size_t >( r.n ), 1 );
        const auto model = build_model( e, opts );
        const std::string text = emit_lp( model.lp );
        EXPECT_EQ( text, emit_lp( build_model( e, opts ).lp ) );

        const ParsedLp lp = parse_lp( text );
        EXPECT_TRUE( lp.ended );
        EXPECT_EQ( lp.maximize, true );
        ASSERT_EQ( lp.rows.size(), model.lp.rows().size() );
        EXPECT_EQ( lp.bounds.size(), model.lp.variables().size() );
        EXPECT_EQ( lp.generals.size(), model.lp.variables().size() );
        const auto& vars = model.lp.variables();
        for ( std::size_t k = 0; k < model.lp.rows().size(); ++k ) {
            const auto& row = model.lp.rows()[ k ];
            EXPECT_EQ( lp.row_order[ k ], row.name );
            const auto& parsed = lp.rows.at( row.name );
            EXPECT_EQ( parsed.op, op_of( row.sense ) );
            EXPECT_EQ( parsed.rhs, row.rhs );
            std::map< std::string, std::int64_t > expected;
            for ( const auto& t : row.terms )
                expected[ vars[ static_cast< std::size_t >( t.var ) ].name ] += t.coef;
            std::erase_if( expected, []( const auto& kv ) { return kv.second == 0; } );
            EXPECT_EQ( parsed.terms, expected ) << row.name;
        }
        for ( const auto& v : vars )
            EXPECT_EQ( lp.bounds.at( v.name ), std::make_pair( v.lower, v.upper ) );
        if ( opts.max_welfare ) {
            std::map< std::string, std::int64_t > expected;
            for ( const auto& t : model.lp.objective()->terms )
                expected[ vars[ static_cast< std::size_t >( t.var ) ].name ] += t.coef;
            std::erase_if( expected, []( const auto& kv ) { return kv.second == 0; } );
            EXPECT_EQ( lp.objective, expected );
        }
    }
}

TEST( EmitLp, ThreeRoundTypesThreeEqualityRows )
{
    const Election e( 2, 2, 3, { { { 0 }, { 1 }, { 0, 1 } }, { { 0 }, { 0 }, { 1 } } } );
    const auto model = build_model( e );
    ASSERT_EQ( model.types.size(), 3U );
    const ParsedLp lp = parse_lp( emit_lp( model.lp ) );
    int equalities = 0;
    for ( const auto& [ name, row ] : lp.rows )
        if ( row.op == "=" )
            ++equalities;
    EXPECT_EQ( equalities, 3 );
}
