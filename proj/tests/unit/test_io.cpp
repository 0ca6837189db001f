#include <gtest/gtest.h>

#include "tjr/errors.hpp"
#include "tjr/generators.hpp"
#include "tjr/io.hpp"
#include "tjr/rules.hpp"

using namespace tjr;

namespace
{

std::string input_error( std::string_view text )
{
    try {
        (void)parse_election( text );
    } catch ( const InputError& e ) {
        return e.what();
    }
    return "";
}

} // namespace

TEST( ElectionJson, RoundTrip )
{
    const Election e = gen_example1();
    EXPECT_EQ( parse_election( election_to_json( e ) ), e );
    const Election small( 2, 3, 2, { { { 0, 2 }, {} }, { { 1 }, { 2 } } } );
    EXPECT_EQ( election_to_json( small ), "{\"n\":2,\"m\":3,\"ell\":2,\"approvals\":[[[1,3],[]],[[2],[3]]]}\n" );
}

TEST( ElectionJson, PositionBearingErrors )
{
    EXPECT_NE( input_error( "{" ).find( "election" ), std::string::npos );
    EXPECT_NE( input_error( R"({"n":1,"m":1,"ell":1})" ).find( "approvals" ), std::string::npos );
    EXPECT_NE( input_error( R"({"n":2,"m":1,"ell":1,"approvals":[[[1]]]})" ).find( "expected 2 voters" ),
               std::string::npos );
    EXPECT_NE( input_error( R"({"n":1,"m":1,"ell":2,"approvals":[[[1]]]})" ).find( "approvals[1]" ),
               std::string::npos );
    EXPECT_NE( input_error( R"({"n":1,"m":2,"ell":2,"approvals":[[[1],[1,3]]]})" ).find( "approvals[1][2][2]" ),
               std::string::npos );
    EXPECT_NE( input_error( R"({"n":1,"m":2,"ell":1,"approvals":[[["a"]]]})" ).find( "expected an integer" ),
               std::string::npos );
    EXPECT_NE( input_error( R"({"n":0,"m":2,"ell":1,"approvals":[]})" ), "" );
}

TEST( OutcomeJson, RoundTripAndErrors )
{
    const Outcome o( { 0, 4, 2 } );
    EXPECT_EQ( outcome_to_json( o ), "{\"choices\":[1,5,3]}\n" );
    EXPECT_EQ( parse_outcome( outcome_to_json( o ) ), o );
    EXPECT_THROW( (void)parse_outcome( R"({"choices":[]})" ), InputError );
    EXPECT_THROW( (void)parse_outcome( R"({"choices":[0]})" ), InputError );
    EXPECT_THROW( (void)parse_outcome( R"([1])" ), InputError );
}

TEST( ReportJson, Fields )
{
    VerifyReport r;
    r.spec = { Axiom::pjr, Strength::weak };
    r.holds = false;
    r.witness = Witness{ VoterGroup( std::vector< int >{ 0, 2 } ), 3, 1, 0 };
    r.method = Method::enumerative;
    r.groups_examined = 9;
    EXPECT_EQ( report_to_json( r ),
               "{\"axiom\":\"pjr\",\"strength\":\"weak\",\"holds\":false,\"method\":\"enumerative\","
               "\"witness\":{\"group\":[1,3],\"beta\":3,\"alpha\":1,\"observed\":0},\"groups_examined\":9}\n" );
    r.holds = true;
    r.witness.reset();
    EXPECT_NE( report_to_json( r ).find( "\"witness\":null" ), std::string::npos );
}

TEST( GraphText, ParseAndWrite )
{
    const Graph g = parse_graph( "# a path\n3 2\n1 2\n\n2 3\n" );
    EXPECT_EQ( g.vertices(), 3 );
    EXPECT_EQ( g.edges().size(), 2U );
    EXPECT_EQ( parse_graph( graph_to_text( g ) ), g );

    const Graph b = parse_graph( "4 1 bipartite 2\n1 3\n" );
    EXPECT_TRUE( b.is_bipartite() );
    EXPECT_EQ( b.left_size(), 2 );
    EXPECT_EQ( parse_graph( graph_to_text( b ) ), b );

    const Graph p = parse_graph( "3 1 parts 3 1 1 1\n1 3\n" );
    EXPECT_EQ( p.part_sizes(), ( std::vector< int >{ 1, 1, 1 } ) );
    EXPECT_EQ( parse_graph( graph_to_text( p ) ), p );
}

TEST( GraphText, Errors )
{
    EXPECT_THROW( (void)parse_graph( "" ), InputError );
    EXPECT_THROW( (void)parse_graph( "3 2\n1 2\n" ), InputError );
    EXPECT_THROW( (void)parse_graph( "3 1\n1 4\n" ), InputError );
    EXPECT_THROW( (void)parse_graph( "3 1\n1 2\n2 3\n" ), InputError );
    EXPECT_THROW( (void)parse_graph( "3 1 bipartite 1\n2 3\n" ), InputError );
    EXPECT_THROW( (void)parse_graph( "3 0 parts 2 1 1\n" ), InputError );
    EXPECT_THROW( (void)parse_graph( "3 0 tripartite\n" ), InputError );
    EXPECT_THROW( (void)parse_graph( "2 1\n1 1\n" ), InputError );
    try {
        (void)parse_graph( "3 1\nx y\n" );
        FAIL();
    } catch ( const InputError& e ) {
        EXPECT_NE( std::string( e.what() ).find( "line 2" ), std::string::npos );
    }
}

TEST( BundleJson, Fields )
{
    const auto b = gen_clique_wjr( Graph( 2, { { 0, 1 } } ), 2 );
    const std::string text = bundle_to_json( b );
    EXPECT_EQ( text.rfind( "{\"property\":\"clique\",\"parameter\":2,\"axiom\":\"jr\",\"strength\":\"weak\",", 0 ),
               0U );
    EXPECT_NE( text.find( "\"outcome\":{\"choices\":[3,3]}" ), std::string::npos );
}

TEST( TraceJson, Fields )
{
    const Election e( 2, 1, 2, { { { 0 }, { 0 } }, { { 0 }, { 0 } } } );
    EXPECT_EQ( trace_to_json( "gcr", gcr( e ).family ),
               "{\"rule\":\"gcr\",\"groups\":[{\"group\":[1,2],\"beta\":2,\"alpha\":2,\"rounds\":[1,2]}]}\n" );
}

TEST( Floors, Parse )
{
    EXPECT_EQ( parse_floors( "[0, 2, 1]", 3 ), ( std::vector< int >{ 0, 2, 1 } ) );
    EXPECT_THROW( (void)parse_floors( "[0, 2]", 3 ), InputError );
    EXPECT_THROW( (void)parse_floors( "[0, -1]", 2 ), InputError );
    EXPECT_THROW( (void)parse_floors( "{}", 2 ), InputError );
}

TEST( Files, MissingPath )
{
    EXPECT_THROW( (void)read_file( "/nonexistent/file.json" ), InputError );
    EXPECT_THROW( write_file( "/nonexistent/dir/file.json", "x" ), InputError );
}
