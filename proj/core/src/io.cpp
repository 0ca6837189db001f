#include "tjr/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "tjr/errors.hpp"

namespace tjr
{

namespace
{

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_json( std::string_view text, std::string_view what )
{
    try {
        return json::parse( text );
    } catch ( const json::parse_error& err ) {
        throw InputError( std::string( what ) + ": " + err.what() );
    }
}

const json& field( const json& obj, const char* key, std::string_view what )
{
    if ( !obj.is_object() )
        throw InputError( std::string( what ) + ": expected a JSON object" );
    auto it = obj.find( key );
    if ( it == obj.end() )
        throw InputError( std::string( what ) + ": missing field \"" + key + "\"" );
    return *it;
}

int as_int( const json& value, const std::string& where )
{
    if ( !value.is_number_integer() )
        throw InputError( where + ": expected an integer" );
    const auto v = value.get< std::int64_t >();
    if ( v < std::numeric_limits< int >::min() || v > std::numeric_limits< int >::max() )
        throw InputError( where + ": integer out of range" );
    return static_cast< int >( v );
}

const json& as_array( const json& value, const std::string& where )
{
    if ( !value.is_array() )
        throw InputError( where + ": expected an array" );
    return value;
}

std::string at( std::string_view base, std::initializer_list< std::size_t > positions )
{
    std::string out( base );
    for ( auto p : positions )
        out += "[" + std::to_string( p + 1 ) + "]";
    return out;
}

std::string dump( const ordered& value )
{
    return value.dump() + "\n";
}

ordered one_based( const std::vector< int >& values )
{
    ordered out = ordered::array();
    for ( int v : values )
        out.push_back( v + 1 );
    return out;
}

ordered election_json( const Election& e )
{
    ordered approvals = ordered::array();
    for ( int i = 0; i < e.voters(); ++i ) {
        ordered rounds = ordered::array();
        for ( int t = 0; t < e.rounds(); ++t )
            rounds.push_back( one_based( e.approval_set( i, t ) ) );
        approvals.push_back( std::move( rounds ) );
    }
    ordered out;
    out[ "n" ] = e.voters();
    out[ "m" ] = e.candidates();
    out[ "ell" ] = e.rounds();
    out[ "approvals" ] = std::move( approvals );
    return out;
}

ordered outcome_json( const Outcome& o )
{
    ordered out;
    out[ "choices" ] = one_based( o.choices() );
    return out;
}

} // namespace

Election parse_election( std::string_view text )
{
    const json doc = parse_json( text, "election" );
    const int n = as_int( field( doc, "n", "election" ), "election.n" );
    const int m = as_int( field( doc, "m", "election" ), "election.m" );
    const int ell = as_int( field( doc, "ell", "election" ), "election.ell" );
    if ( n < 1 || m < 1 || ell < 1 )
        throw InputError( "election: n, m and ell must be >= 1" );
    const auto& approvals = as_array( field( doc, "approvals", "election" ), "election.approvals" );
    if ( approvals.size() != static_cast< std::size_t >( n ) )
        throw InputError( "approvals: expected " + std::to_string( n ) + " voters, got "
                          + std::to_string( approvals.size() ) );

    std::vector< std::vector< std::vector< int > > > sets( static_cast< std::size_t >( n ) );
    for ( std::size_t i = 0; i < approvals.size(); ++i ) {
        const auto& rounds = as_array( approvals[ i ], at( "approvals", { i } ) );
        if ( rounds.size() != static_cast< std::size_t >( ell ) )
            throw InputError( at( "approvals", { i } ) + ": expected " + std::to_string( ell ) + " rounds, got "
                              + std::to_string( rounds.size() ) );
        for ( std::size_t t = 0; t < rounds.size(); ++t ) {
            const auto& set = as_array( rounds[ t ], at( "approvals", { i, t } ) );
            std::vector< int > members;
            for ( std::size_t k = 0; k < set.size(); ++k ) {
                const auto where = at( "approvals", { i, t, k } );
                const int p = as_int( set[ k ], where );
                if ( p < 1 || p > m )
                    throw InputError( where + ": candidate " + std::to_string( p ) + " out of range 1.."
                                      + std::to_string( m ) );
                members.push_back( p - 1 );
            }
            sets[ i ].push_back( std::move( members ) );
        }
    }
    return Election( n, m, ell, sets );
}

std::string election_to_json( const Election& e )
{
    return dump( election_json( e ) );
}

Outcome parse_outcome( std::string_view text )
{
    const json doc = parse_json( text, "outcome" );
    const auto& choices = as_array( field( doc, "choices", "outcome" ), "outcome.choices" );
    if ( choices.empty() )
        throw InputError( "outcome.choices: must not be empty" );
    std::vector< int > values;
    for ( std::size_t t = 0; t < choices.size(); ++t ) {
        const auto where = at( "choices", { t } );
        const int p = as_int( choices[ t ], where );
        if ( p < 1 )
            throw InputError( where + ": candidate " + std::to_string( p ) + " must be >= 1" );
        values.push_back( p - 1 );
    }
    return Outcome( std::move( values ) );
}

std::string outcome_to_json( const Outcome& o )
{
    return dump( outcome_json( o ) );
}

std::string report_to_json( const VerifyReport& report )
{
    ordered out;
    out[ "axiom" ] = to_string( report.spec.axiom );
    out[ "strength" ] = to_string( report.spec.strength );
    out[ "holds" ] = report.holds;
    out[ "method" ] = to_string( report.method );
    if ( report.witness ) {
        ordered w;
        w[ "group" ] = one_based( report.witness->group.members() );
        w[ "beta" ] = report.witness->beta;
        w[ "alpha" ] = report.witness->alpha;
        w[ "observed" ] = report.witness->observed;
        out[ "witness" ] = std::move( w );
    } else {
        out[ "witness" ] = nullptr;
    }
    out[ "groups_examined" ] = report.groups_examined;
    return dump( out );
}

Graph parse_graph( std::string_view text )
{
    std::istringstream in{ std::string( text ) };
    std::string line;
    int line_no = 0;
    auto next_line = [ & ]() -> bool {
        while ( std::getline( in, line ) ) {
            ++line_no;
            const auto start = line.find_first_not_of( " \t\r" );
            if ( start != std::string::npos && line[ start ] != '#' )
                return true;
        }
        return false;
    };
    auto fail = [ & ]( const std::string& msg ) -> InputError {
        return InputError( "graph line " + std::to_string( line_no ) + ": " + msg );
    };

    if ( !next_line() )
        throw InputError( "graph: empty input" );
    std::istringstream header( line );
    int nu = 0;
    int mu = 0;
    if ( !( header >> nu >> mu ) || nu < 0 || mu < 0 )
        throw fail( "expected \"nu mu\" with non-negative counts" );
    std::string kind;
    std::optional< int > left;
    std::vector< int > parts;
    if ( header >> kind ) {
        if ( kind == "bipartite" ) {
            int l = 0;
            if ( !( header >> l ) )
                throw fail( "bipartite needs the size of L" );
            left = l;
        } else if ( kind == "parts" ) {
            int k = 0;
            if ( !( header >> k ) || k < 1 )
                throw fail( "parts needs a positive part count" );
            for ( int i = 0; i < k; ++i ) {
                int s = 0;
                if ( !( header >> s ) )
                    throw fail( "parts lists fewer than " + std::to_string( k ) + " sizes" );
                parts.push_back( s );
            }
        } else {
            throw fail( "unknown partition kind '" + kind + "'" );
        }
        std::string extra;
        if ( header >> extra )
            throw fail( "unexpected trailing token '" + extra + "'" );
    }

    std::vector< Graph::Edge > edges;
    for ( int k = 0; k < mu; ++k ) {
        if ( !next_line() )
            throw InputError( "graph: expected " + std::to_string( mu ) + " edges, found " + std::to_string( k ) );
        std::istringstream row( line );
        int u = 0;
        int v = 0;
        std::string extra;
        if ( !( row >> u >> v ) || ( row >> extra ) )
            throw fail( "expected \"u v\"" );
        if ( u < 1 || v < 1 || u > nu || v > nu )
            throw fail( "vertex out of range 1.." + std::to_string( nu ) );
        edges.emplace_back( u - 1, v - 1 );
    }
    if ( next_line() )
        throw fail( "more edge lines than the declared " + std::to_string( mu ) );

    try {
        if ( left ) {
            if ( *left < 0 || *left > nu )
                throw InputError( "bipartition size out of range" );
            return Graph::bipartite( *left, nu - *left, std::move( edges ) );
        }
        if ( !parts.empty() ) {
            Graph g = Graph::multipartite( std::move( parts ), std::move( edges ) );
            if ( g.vertices() != nu )
                throw InputError( "part sizes add up to " + std::to_string( g.vertices() ) + ", not "
                                  + std::to_string( nu ) );
            return g;
        }
        return Graph( nu, std::move( edges ) );
    } catch ( const InputError& err ) {
        throw InputError( std::string( "graph: " ) + err.what() );
    }
}

std::string graph_to_text( const Graph& g )
{
    std::ostringstream out;
    out << g.vertices() << ' ' << g.edges().size();
    if ( g.is_bipartite() )
        out << " bipartite " << g.left_size();
    if ( g.is_multipartite() ) {
        out << " parts " << g.part_sizes().size();
        for ( int s : g.part_sizes() )
            out << ' ' << s;
    }
    out << '\n';
    for ( auto [ u, v ] : g.edges() )
        out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string bundle_to_json( const ReductionBundle& bundle )
{
    ordered out;
    out[ "property" ] = to_string( bundle.property );
    out[ "parameter" ] = bundle.parameter;
    out[ "axiom" ] = to_string( bundle.spec.axiom );
    out[ "strength" ] = to_string( bundle.spec.strength );
    out[ "election" ] = election_json( bundle.election );
    out[ "outcome" ] = outcome_json( bundle.outcome );
    return dump( out );
}

std::string trace_to_json( std::string_view rule, const CohesiveFamily& family )
{
    ordered groups = ordered::array();
    for ( const auto& g : family.groups ) {
        ordered entry;
        entry[ "group" ] = one_based( g.group.members() );
        entry[ "beta" ] = g.beta;
        entry[ "alpha" ] = g.alpha;
        entry[ "rounds" ] = one_based( g.rounds );
        groups.push_back( std::move( entry ) );
    }
    ordered out;
    out[ "rule" ] = rule;
    out[ "groups" ] = std::move( groups );
    return dump( out );
}

std::vector< int > parse_floors( std::string_view text, int voters )
{
    const json doc = parse_json( text, "floors" );
    const auto& values = as_array( doc, "floors" );
    if ( values.size() != static_cast< std::size_t >( voters ) )
        throw InputError( "floors: expected " + std::to_string( voters ) + " entries, got "
                          + std::to_string( values.size() ) );
    std::vector< int > floors;
    for ( std::size_t i = 0; i < values.size(); ++i ) {
        const int f = as_int( values[ i ], at( "floors", { i } ) );
        if ( f < 0 )
            throw InputError( at( "floors", { i } ) + ": floor must be >= 0" );
        floors.push_back( f );
    }
    return floors;
}

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw InputError( "cannot open '" + path + "'" );
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file( const std::string& path, std::string_view contents )
{
    std::ofstream out( path, std::ios::binary );
    if ( !out )
        throw InputError( "cannot write '" + path + "'" );
    out << contents;
    if ( !out )
        throw InputError( "failed writing '" + path + "'" );
}

} // namespace tjr
