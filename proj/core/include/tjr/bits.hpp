#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace tjr::bits
{

[[nodiscard]] inline int words_for( int count ) { return std::max( 1, ( count + 63 ) / 64 ); }

[[nodiscard]] inline bool test( std::span< const std::uint64_t > set, int index )
{
    return ( set[ static_cast< std::size_t >( index ) / 64 ] >> ( index % 64 ) ) & 1U;
}

inline void set( std::span< std::uint64_t > set, int index )
{
    set[ static_cast< std::size_t >( index ) / 64 ] |= std::uint64_t{ 1 } << ( index % 64 );
}

[[nodiscard]] inline bool any( std::span< const std::uint64_t > set )
{
    return std::any_of( set.begin(), set.end(), []( std::uint64_t w ) { return w != 0; } );
}

[[nodiscard]] inline int count( std::span< const std::uint64_t > set )
{
    int total = 0;
    for ( auto w : set )
        total += std::popcount( w );
    return total;
}

inline void and_into( std::span< std::uint64_t > acc, std::span< const std::uint64_t > other )
{
    for ( std::size_t w = 0; w < acc.size(); ++w )
        acc[ w ] &= other[ w ];
}

[[nodiscard]] inline bool is_subset( std::span< const std::uint64_t > a, std::span< const std::uint64_t > b )
{
    for ( std::size_t w = 0; w < a.size(); ++w )
        if ( a[ w ] & ~b[ w ] )
            return false;
    return true;
}

template < typename F >
void for_each( std::span< const std::uint64_t > set, F&& f )
{
    for ( std::size_t w = 0; w < set.size(); ++w )
        for ( auto word = set[ w ]; word != 0; word &= word - 1 )
            f( static_cast< int >( w * 64 + static_cast< std::size_t >( std::countr_zero( word ) ) ) );
}

[[nodiscard]] inline std::vector< int > to_indices( std::span< const std::uint64_t > set )
{
    std::vector< int > out;
    for_each( set, [ & ]( int i ) { out.push_back( i ); } );
    return out;
}

} // namespace tjr::bits
