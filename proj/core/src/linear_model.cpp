#include "tjr/linear_model.hpp"

#include <algorithm>
#include <sstream>

#include "tjr/errors.hpp"

namespace tjr
{

int LinearModel::add_variable( std::string name, std::int64_t lower, std::int64_t upper )
{
    if ( lower > upper )
        throw InputError( "variable " + name + ": empty domain" );
    _vars.push_back( { std::move( name ), lower, upper } );
    return static_cast< int >( _vars.size() ) - 1;
}

void LinearModel::add_row( std::string name, std::vector< Term > terms, Sense sense, std::int64_t rhs )
{
    for ( const auto& t : terms )
        if ( t.var < 0 || t.var >= static_cast< int >( _vars.size() ) )
            throw InputError( "row " + name + ": unknown variable index " + std::to_string( t.var ) );
    _rows.push_back( { std::move( name ), std::move( terms ), sense, rhs } );
}

void LinearModel::set_objective( Objective objective )
{
    _objective = std::move( objective );
}

namespace
{

std::int64_t activity( const std::vector< Term >& terms, std::span< const std::int64_t > values )
{
    std::int64_t sum = 0;
    for ( const auto& t : terms )
        sum += t.coef * values[ static_cast< std::size_t >( t.var ) ];
    return sum;
}

std::int64_t floor_div( std::int64_t a, std::int64_t b )
{
    std::int64_t q = a / b;
    if ( ( a % b != 0 ) && ( ( a < 0 ) != ( b < 0 ) ) )
        --q;
    return q;
}

std::int64_t ceil_div( std::int64_t a, std::int64_t b )
{
    return -floor_div( -a, b );
}

struct Domains
{
    std::vector< std::int64_t > lo;
    std::vector< std::int64_t > hi;
};

// Tightens `d` against sum(terms) <= rhs. False on infeasibility.
bool tighten_le( const std::vector< Term >& terms, std::int64_t rhs, Domains& d, bool& changed )
{
    std::int64_t min_act = 0;
    for ( const auto& t : terms )
        min_act += t.coef > 0 ? t.coef * d.lo[ static_cast< std::size_t >( t.var ) ]
                              : t.coef * d.hi[ static_cast< std::size_t >( t.var ) ];
    if ( min_act > rhs )
        return false;
    for ( const auto& t : terms ) {
        if ( t.coef == 0 )
            continue;
        const auto v = static_cast< std::size_t >( t.var );
        const std::int64_t own = t.coef > 0 ? t.coef * d.lo[ v ] : t.coef * d.hi[ v ];
        const std::int64_t room = rhs - ( min_act - own );
        if ( t.coef > 0 ) {
            const auto bound = floor_div( room, t.coef );
            if ( bound < d.hi[ v ] ) {
                d.hi[ v ] = bound;
                changed = true;
            }
        } else {
            const auto bound = ceil_div( room, t.coef );
            if ( bound > d.lo[ v ] ) {
                d.lo[ v ] = bound;
                changed = true;
            }
        }
        if ( d.lo[ v ] > d.hi[ v ] )
            return false;
    }
    return true;
}

class Search
{
public:
    Search( const LinearModel& model, const SolverConfig& config ) : _model{ model }, _config{ config }
    {
        for ( const auto& row : model.rows() ) {
            std::vector< Term > negated;
            for ( const auto& t : row.terms )
                negated.push_back( { t.var, -t.coef } );
            if ( row.sense != Sense::ge )
                _le.push_back( { row.terms, row.rhs } );
            if ( row.sense != Sense::le )
                _le.push_back( { std::move( negated ), -row.rhs } );
        }
        if ( model.objective() ) {
            _obj = model.objective()->terms;
            if ( !model.objective()->maximize )
                for ( auto& t : _obj )
                    t.coef = -t.coef;
        }
    }

    SolveResult run()
    {
        Domains root;
        for ( const auto& v : _model.variables() ) {
            root.lo.push_back( v.lower );
            root.hi.push_back( v.upper );
        }
        if ( propagate( root ) )
            dfs( root );
        SolveResult result;
        result.nodes = _nodes;
        if ( _best ) {
            result.status = _model.objective() ? SolveStatus::optimal : SolveStatus::feasible;
            result.values = *_best;
            result.objective = _model.objective_value( *_best );
        }
        return result;
    }

private:
    struct LeRow
    {
        std::vector< Term > terms;
        std::int64_t rhs;
    };

    bool propagate( Domains& d ) const
    {
        bool changed = true;
        while ( changed ) {
            changed = false;
            for ( const auto& row : _le )
                if ( !tighten_le( row.terms, row.rhs, d, changed ) )
                    return false;
        }
        return true;
    }

    std::int64_t objective_bound( const Domains& d ) const
    {
        std::int64_t bound = 0;
        for ( const auto& t : _obj )
            bound += t.coef > 0 ? t.coef * d.hi[ static_cast< std::size_t >( t.var ) ]
                                : t.coef * d.lo[ static_cast< std::size_t >( t.var ) ];
        return bound;
    }

    // Returns true once the search may stop.
    bool dfs( const Domains& d )
    {
        if ( ++_nodes > _config.max_nodes )
            throw CapacityError( "ILP search exceeded " + std::to_string( _config.max_nodes )
                                 + " nodes; export the model with --emit-lp and use an external solver" );
        if ( _best && objective_bound( d ) <= _best_value )
            return false;

        std::size_t branch = d.lo.size();
        for ( std::size_t v = 0; v < d.lo.size(); ++v )
            if ( d.lo[ v ] < d.hi[ v ] ) {
                branch = v;
                break;
            }
        if ( branch == d.lo.size() ) {
            _best = d.lo;
            _best_value = objective_bound( d );
            return !_model.objective().has_value();
        }
        for ( std::int64_t value = d.lo[ branch ]; value <= d.hi[ branch ]; ++value ) {
            Domains child = d;
            child.lo[ branch ] = child.hi[ branch ] = value;
            if ( propagate( child ) && dfs( child ) )
                return true;
        }
        return false;
    }

    const LinearModel& _model;
    const SolverConfig& _config;
    std::vector< LeRow > _le;
    std::vector< Term > _obj;
    std::optional< std::vector< std::int64_t > > _best;
    std::int64_t _best_value = 0;
    std::uint64_t _nodes = 0;
};

void write_terms( std::ostream& out, const LinearModel& model, const std::vector< Term >& terms )
{
    int on_line = 0;
    bool first = true;
    for ( const auto& t : terms ) {
        if ( t.coef == 0 )
            continue;
        if ( on_line == 8 ) {
            out << "\n   ";
            on_line = 0;
        }
        const auto magnitude = t.coef < 0 ? -t.coef : t.coef;
        if ( t.coef < 0 )
            out << ( first ? "-" : " -" );
        else if ( !first )
            out << " +";
        out << ' ';
        if ( magnitude != 1 )
            out << magnitude << ' ';
        out << model.variables()[ static_cast< std::size_t >( t.var ) ].name;
        first = false;
        ++on_line;
    }
    if ( first )
        out << " 0 " << ( model.variables().empty() ? std::string( "dummy" ) : model.variables().front().name );
}

} // namespace

bool LinearModel::is_feasible( std::span< const std::int64_t > values ) const
{
    if ( values.size() != _vars.size() )
        return false;
    for ( std::size_t v = 0; v < _vars.size(); ++v )
        if ( values[ v ] < _vars[ v ].lower || values[ v ] > _vars[ v ].upper )
            return false;
    for ( const auto& row : _rows ) {
        const auto lhs = activity( row.terms, values );
        if ( ( row.sense == Sense::le && lhs > row.rhs ) || ( row.sense == Sense::ge && lhs < row.rhs )
             || ( row.sense == Sense::eq && lhs != row.rhs ) )
            return false;
    }
    return true;
}

std::int64_t LinearModel::objective_value( std::span< const std::int64_t > values ) const
{
    return _objective ? activity( _objective->terms, values ) : 0;
}

std::string_view to_string( SolveStatus status )
{
    switch ( status ) {
    case SolveStatus::optimal:
        return "optimal";
    case SolveStatus::feasible:
        return "feasible";
    case SolveStatus::infeasible:
        return "infeasible";
    }
    return "?";
}

SolveResult solve_exact( const LinearModel& model, const SolverConfig& config )
{
    return Search( model, config ).run();
}

std::string emit_lp( const LinearModel& model )
{
    std::ostringstream out;
    const bool maximize = !model.objective() || model.objective()->maximize;
    out << ( maximize ? "Maximize" : "Minimize" ) << "\n obj:";
    write_terms( out, model, model.objective() ? model.objective()->terms : std::vector< Term >{} );
    out << "\nSubject To\n";
    for ( const auto& row : model.rows() ) {
        out << ' ' << row.name << ':';
        write_terms( out, model, row.terms );
        out << ( row.sense == Sense::le ? " <= " : row.sense == Sense::eq ? " = " : " >= " ) << row.rhs << '\n';
    }
    out << "Bounds\n";
    for ( const auto& v : model.variables() )
        out << ' ' << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
    out << "Generals\n";
    for ( const auto& v : model.variables() )
        out << ' ' << v.name << '\n';
    out << "End\n";
    return out.str();
}

} // namespace tjr
