#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "tjr/io.hpp"
#include "tjr_app/cli.hpp"

using namespace tjr;
using namespace tjr::app;

namespace
{

namespace fs = std::filesystem;

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run( std::vector< std::string > args )
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli( args, out, err );
    return { code, out.str(), err.str() };
}

class Cli : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ( "tjr_cli_" + std::to_string( ::testing::UnitTest::GetInstance()->random_seed() )
                                            + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name() );
        fs::create_directories( dir );
    }
    void TearDown() override { fs::remove_all( dir ); }

    std::string file( const std::string& name, const std::string& contents )
    {
        const auto p = ( dir / name ).string();
        write_file( p, contents );
        return p;
    }
    std::string path( const std::string& name ) const { return ( dir / name ).string(); }

    fs::path dir;
};

} // namespace

TEST_F( Cli, VerifyExampleOneHolds )
{
    const auto election = path( "ex.json" );
    ASSERT_EQ( run( { "gen", "example1", "-o", election } ).code, exit_ok );
    const auto outcome = file( "o.json", R"({"choices":[3,7,21]})" );
    const auto r = run( { "verify", "--election", election, "--outcome", outcome, "--axiom", "ejr" } );
    EXPECT_EQ( r.code, exit_ok );
    EXPECT_NE( r.out.find( "\"holds\":true" ), std::string::npos );
}

TEST_F( Cli, VerifyCliqueBundleFails )
{
    const auto graph = file( "tri.txt", "3 3\n1 2\n2 3\n1 3\n" );
    const auto e = path( "e.json" );
    const auto o = path( "o.json" );
    ASSERT_EQ( run( { "reduce", "clique", "--graph", graph, "--kappa", "3", "--election-out", e, "--outcome-out", o } )
                   .code,
               exit_ok );
    const auto r = run( { "verify", "--election", e, "--outcome", o, "--axiom", "jr", "--weak" } );
    EXPECT_EQ( r.code, exit_violated );
    EXPECT_NE( r.out.find( "\"group\":[1,2,3]" ), std::string::npos );
    const auto bf = run( { "verify", "--election", e, "--outcome", o, "--axiom", "jr", "--weak", "--method", "bruteforce" } );
    EXPECT_EQ( bf.code, exit_violated );
    EXPECT_NE( bf.out.find( "\"method\":\"bruteforce\"" ), std::string::npos );
}

TEST_F( Cli, InputErrors )
{
    const auto bad = file( "bad.json", "{" );
    const auto o = file( "o.json", R"({"choices":[1]})" );
    EXPECT_EQ( run( { "verify", "--election", bad, "--outcome", o, "--axiom", "ejr" } ).code, exit_input );
    EXPECT_EQ( run( { "verify", "--election", path( "missing.json" ), "--outcome", o, "--axiom", "ejr" } ).code,
               exit_input );
    const auto e = file( "e.json", R"({"n":1,"m":1,"ell":1,"approvals":[[[1]]]})" );
    EXPECT_EQ( run( { "verify", "--election", e, "--outcome", o, "--axiom", "xjr" } ).code, exit_input );
    EXPECT_EQ( run( { "verify", "--election", e, "--outcome", o, "--axiom", "ejr", "--method", "magic" } ).code,
               exit_input );
    EXPECT_EQ( run( { "verify", "--election", e, "--outcome", o, "--axiom", "ejr", "--method", "two-candidate-wjr" } ).code,
               exit_input );
    const auto long_o = file( "o2.json", R"({"choices":[1,1]})" );
    EXPECT_EQ( run( { "verify", "--election", e, "--outcome", long_o, "--axiom", "ejr" } ).code, exit_input );
    EXPECT_EQ( run( {} ).code, exit_input );
    EXPECT_EQ( run( { "verify" } ).code, exit_input );
    EXPECT_EQ( run( { "bogus" } ).code, exit_input );
    EXPECT_EQ( run( { "--help" } ).code, exit_ok );
}

TEST_F( Cli, CapacityError )
{
    const auto e = path( "r.json" );
    ASSERT_EQ( run( { "gen", "random", "--seed", "1", "--n", "30", "--m", "10", "--ell", "30", "--density", "0.3", "-o", e } )
                   .code,
               exit_ok );
    std::string choices = R"({"choices":[)";
    for ( int t = 0; t < 30; ++t )
        choices += t ? ",1" : "1";
    const auto o = file( "o.json", choices + "]}" );
    const auto r = run( { "verify", "--election", e, "--outcome", o, "--axiom", "ejr" } );
    EXPECT_EQ( r.code, exit_capacity );
    EXPECT_NE( r.err.find( "capacity" ), std::string::npos );
    EXPECT_EQ( run( { "solve", "--election", e, "--rule", "gcr" } ).code, exit_capacity );
    EXPECT_EQ( run( { "solve", "--election", e, "--rule", "ilp" } ).code, exit_capacity );
}

TEST_F( Cli, SolveRules )
{
    const auto ex = path( "ex.json" );
    ASSERT_EQ( run( { "gen", "example1", "-o", ex } ).code, exit_ok );
    const auto trace = path( "trace.json" );
    const auto r = run( { "solve", "--election", ex, "--rule", "gcr", "--trace", trace } );
    EXPECT_EQ( r.code, exit_ok );
    EXPECT_EQ( r.out, "{\"choices\":[1,1,1]}\n" );
    EXPECT_NE( read_file( trace ).find( "\"rule\":\"gcr\"" ), std::string::npos );

    EXPECT_EQ( run( { "solve", "--election", ex, "--rule", "gcr-mono" } ).code, exit_input );
    EXPECT_EQ( run( { "solve", "--election", ex, "--rule", "gcr", "--max-welfare" } ).code, exit_input );
    EXPECT_EQ( run( { "solve", "--election", ex, "--rule", "pav" } ).code, exit_input );

    const auto mono = file( "m.json", R"({"n":2,"m":1,"ell":2,"approvals":[[[1],[1]],[[1],[1]]]})" );
    const auto m = run( { "solve", "--election", mono, "--rule", "gcr-mono" } );
    EXPECT_EQ( m.code, exit_ok );
    EXPECT_EQ( m.out, "{\"choices\":[1,1]}\n" );
}

TEST_F( Cli, SolveIlp )
{
    const auto e = file( "e.json", R"({"n":2,"m":2,"ell":3,"approvals":[[[1],[1],[1]],[[2],[2],[2]]]})" );
    const auto lp = path( "model.lp" );
    const auto r = run( { "solve", "--election", e, "--rule", "ilp", "--max-welfare", "--emit-lp", lp } );
    EXPECT_EQ( r.code, exit_ok );
    EXPECT_EQ( r.out.rfind( "{\"status\":\"optimal\",\"outcome\":[", 0 ), 0U );
    EXPECT_NE( r.out.find( "\"welfare\":3" ), std::string::npos );
    EXPECT_EQ( read_file( lp ).rfind( "Maximize", 0 ), 0U );

    const auto floors = file( "floors.json", "[3, 3]" );
    const auto inf = run( { "solve", "--election", e, "--rule", "ilp", "--max-welfare", "--floors", floors } );
    EXPECT_EQ( inf.code, exit_infeasible );
    EXPECT_EQ( inf.out, "{\"status\":\"infeasible\",\"outcome\":null,\"welfare\":null}\n" );

    const auto short_floors = file( "short.json", "[3]" );
    EXPECT_EQ( run( { "solve", "--election", e, "--rule", "ilp", "--floors", short_floors } ).code, exit_input );
}

TEST_F( Cli, Generators )
{
    const auto a = run( { "gen", "random", "--seed", "9", "--n", "3", "--m", "2", "--ell", "2", "--density", "0.5" } );
    const auto b = run( { "gen", "random", "--seed", "9", "--n", "3", "--m", "2", "--ell", "2", "--density", "0.5" } );
    EXPECT_EQ( a.code, exit_ok );
    EXPECT_EQ( a.out, b.out );
    EXPECT_EQ( run( { "gen", "semionline", "--k", "3" } ).code, exit_input );
    EXPECT_EQ( run( { "gen", "semionline", "--k", "4" } ).out, election_to_json( parse_election( run( { "gen", "semionline", "--k", "4" } ).out ) ) );
    EXPECT_EQ( run( { "gen" } ).code, exit_input );
}

TEST_F( Cli, Reduce )
{
    const auto tri = file( "tri.txt", "3 3 parts 3 1 1 1\n1 2\n2 3\n1 3\n" );
    const auto r = run( { "reduce", "mcc", "--graph", tri } );
    EXPECT_EQ( r.code, exit_ok );
    EXPECT_EQ( r.out.rfind( "{\"property\":\"multicolored-clique\",\"parameter\":3", 0 ), 0U );

    const auto bip = file( "bip.txt", "2 1 bipartite 1\n1 2\n" );
    const auto blown = run( { "reduce", "biclique", "--graph", bip, "--kappa", "1", "--blowup", "--pad", "--axiom", "pjr" } );
    EXPECT_EQ( blown.code, exit_ok );
    EXPECT_NE( blown.out.find( "\"parameter\":9" ), std::string::npos );
    EXPECT_NE( blown.out.find( "\"axiom\":\"pjr\"" ), std::string::npos );
    EXPECT_EQ( run( { "reduce", "biclique", "--graph", bip, "--kappa", "1" } ).code, exit_input );
    EXPECT_EQ( run( { "reduce", "hamilton", "--graph", bip } ).code, exit_input );

    const auto wide = file( "wide.txt", "5 4\n1 2\n1 3\n1 4\n1 5\n" );
    EXPECT_EQ( run( { "reduce", "is3", "--graph", wide, "--kappa", "1" } ).code, exit_input );
}

TEST_F( Cli, SelfcheckQuick )
{
    const auto r = run( { "selfcheck", "--quick" } );
    EXPECT_EQ( r.code, exit_ok ) << r.out;
    int lines = 0;
    for ( char c : r.out )
        lines += c == '\n';
    EXPECT_EQ( lines, 7 );
    EXPECT_EQ( r.out.find( "FAIL" ), std::string::npos );
}
