// minorkit command-line tool: analyze, mdd, classify, orbits, parse, verify

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <minorkit/minorkit.hpp>

using namespace minorkit;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct function_args
{
  unsigned k{ 2u };
  unsigned n{ 0u };
  std::string code;
  std::string rse;

  function_table load() const
  {
    if ( code.empty() == rse.empty() )
    {
      throw CLI::ValidationError( "give exactly one of --code and --rse" );
    }
    return code.empty() ? parse_rse( rse, k, n ) : decode( parse_code( k, n, code ) );
  }
};

void add_function_options( CLI::App* cmd, function_args& args )
{
  cmd->add_option( "--k", args.k, "radix (number of values)" )->required()->check( CLI::Range( 2u, max_radix ) );
  cmd->add_option( "--n", args.n, "number of variables" )->required()->check( CLI::Range( 0u, 26u ) );
  cmd->add_option( "--code", args.code, "catalogue code (decimal, row 0 is the leading digit)" );
  cmd->add_option( "--rse", args.rse, "ring-sum expansion, e.g. \"x1^0x2 + x1x3\"" );
}

struct space_args
{
  unsigned k{ 2u };
  unsigned n{ 1u };
  std::string format{ "csv" };
  std::string output;
  unsigned jobs{ 1u };
  bool unsafe_large{ false };

  enumeration_options options() const
  {
    enumeration_options o;
    o.jobs = jobs;
    if ( unsafe_large )
    {
      o.max_space = std::numeric_limits<std::uint64_t>::max();
    }
    return o;
  }
};

void add_space_options( CLI::App* cmd, space_args& args )
{
  cmd->add_option( "--k", args.k, "radix" )->required()->check( CLI::Range( 2u, 16u ) );
  cmd->add_option( "--n", args.n, "number of variables" )->required()->check( CLI::Range( 0u, 8u ) );
  cmd->add_option( "--format", args.format, "csv or json" )->check( CLI::IsMember( { "csv", "json" } ) );
  cmd->add_option( "-o,--output", args.output, "output file (default: standard output)" );
  cmd->add_option( "--jobs", args.jobs, "worker threads" )->check( CLI::Range( 1u, 256u ) );
  cmd->add_flag( "--unsafe-large", args.unsafe_large, "lift the limit of 2^26 functions per space" );
}

void write( const std::string& path, const std::string& text )
{
  if ( path.empty() || path == "-" )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( path, std::ios::binary );
  if ( !out || !( out << text ) )
  {
    throw std::runtime_error( "cannot write " + path );
  }
}

std::string render( const partition& p, const std::string& format )
{
  return format == "json" ? to_json( p ).dump( 2 ) + "\n" : to_csv( p );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Minor-based reductions, decision diagrams and classifications of k-valued functions" };
  app.require_subcommand( 1 );
  int status = exit_ok;

  function_args analyze_fn;
  std::vector<std::string> skips;
  std::string analyze_out;
  auto* analyze_cmd = app.add_subcommand( "analyze", "report all metrics of one function as JSON" );
  add_function_options( analyze_cmd, analyze_fn );
  analyze_cmd->add_option( "--skip", skips, "skip an expensive metric (imp, sub)" )->check( CLI::IsMember( { "imp", "sub" } ) );
  analyze_cmd->add_option( "-o,--output", analyze_out, "output file" );
  analyze_cmd->callback( [&] {
    analysis_options opts;
    for ( const auto& s : skips )
    {
      ( s == "imp" ? opts.skip_imp : opts.skip_sub ) = true;
    }
    write( analyze_out, to_json( analyze( analyze_fn.load(), opts ) ).dump( 2 ) + "\n" );
  } );

  function_args mdd_fn;
  std::string dot_path;
  auto* mdd_cmd = app.add_subcommand( "mdd", "write the minor decision diagram in DOT" );
  add_function_options( mdd_cmd, mdd_fn );
  mdd_cmd->add_option( "--dot", dot_path, "DOT output file (default: standard output)" );
  mdd_cmd->callback( [&] { write( dot_path, to_dot( build_mdd( mdd_fn.load() ) ) ); } );

  space_args classify_args;
  std::string relation_name{ "cmr" };
  bool zero_preserving = false;
  auto* classify_cmd = app.add_subcommand( "classify", "partition P_k^n under cmr, mnr, nof or equiv" );
  add_space_options( classify_cmd, classify_args );
  classify_cmd->add_option( "--relation", relation_name, "cmr, mnr, nof or equiv" )->check( CLI::IsMember( { "cmr", "mnr", "nof", "equiv" } ) );
  classify_cmd->add_flag( "--zero-preserving", zero_preserving, "list only members with f(0,...,0) = 0" );
  classify_cmd->callback( [&] {
    auto p = partition_space( classify_args.k, classify_args.n, parse_relation( relation_name ), classify_args.options() );
    if ( zero_preserving )
    {
      p = zero_preserving_view( std::move( p ) );
    }
    write( classify_args.output, render( p, classify_args.format ) );
  } );

  space_args orbit_args;
  std::string group_name{ "S" };
  auto* orbits_cmd = app.add_subcommand( "orbits", "orbits of a subgroup of the restricted affine group" );
  add_space_options( orbits_cmd, orbit_args );
  orbits_cmd->add_option( "--group", group_name, "RAG, GE, CF, G, LF, CA, LG or S" )
      ->check( CLI::IsMember( { "RAG", "GE", "CF", "G", "LF", "CA", "LG", "S" } ) );
  orbits_cmd->callback( [&] {
    const auto p = orbits( orbit_args.k, orbit_args.n, parse_subgroup_kind( group_name ), orbit_args.options() );
    write( orbit_args.output, render( p, orbit_args.format ) );
  } );

  function_args parse_fn;
  auto* parse_cmd = app.add_subcommand( "parse", "convert between a formula and a catalogue code" );
  add_function_options( parse_cmd, parse_fn );
  parse_cmd->callback( [&] {
    const auto f = parse_fn.load();
    std::string digits;
    for ( std::size_t r = 0u; r < f.num_rows(); ++r )
    {
      digits += std::to_string( f[r] ) + ( f.radix() > 10u && r + 1u < f.num_rows() ? "," : "" );
    }
    const nlohmann::json j{ { "k", f.radix() }, { "n", f.num_vars() }, { "code", encode( f ).to_string() }, { "digits", digits }, { "rse", format_miniterms( f ) } };
    std::cout << j.dump( 2 ) << "\n";
  } );

  std::vector<std::string> suites;
  bool verify_json = false, verify_quiet = false;
  unsigned verify_jobs = 1u;
  auto* verify_cmd = app.add_subcommand( "verify", "recompute the published tables and examples" );
  verify_cmd->add_option( "--suite", suites, "suite id (repeatable; default: all)" );
  verify_cmd->add_flag( "--json", verify_json, "print the results as JSON" );
  verify_cmd->add_flag( "-q,--quiet", verify_quiet, "omit passing checks" );
  verify_cmd->add_option( "--jobs", verify_jobs, "worker threads" )->check( CLI::Range( 1u, 256u ) );
  verify_cmd->callback( [&] {
    if ( suites.empty() )
    {
      for ( auto id : verify::suite_ids() )
      {
        suites.emplace_back( id );
      }
    }
    enumeration_options opts;
    opts.jobs = verify_jobs;
    nlohmann::json all = nlohmann::json::array();
    for ( const auto& id : suites )
    {
      const auto r = verify::run_suite( id, opts );
      if ( r.overall() == verify::status::fail )
      {
        status = exit_mismatch;
      }
      if ( verify_json )
      {
        all.push_back( verify::to_json( r ) );
      }
      else
      {
        std::cout << verify::format_report( r, !verify_quiet ) << std::flush;
      }
    }
    if ( verify_json )
    {
      std::cout << all.dump( 2 ) << "\n";
    }
  } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::Success& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return status;
}
