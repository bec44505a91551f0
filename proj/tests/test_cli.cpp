#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igusa/cli.hpp"
#include "igusa/dtcalc.hpp"
#include "igusa/jsonio.hpp"

#include <cstdlib>
#include <regex>
#include <sstream>

using namespace igusa;

namespace {

struct CliResult {
	int code;
	std::string out;
	std::string err;
};

CliResult run(const std::vector<std::string>& args)
{
	std::ostringstream out, err;
	int code = cli_run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string mask_elapsed(std::string s)
{
	return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9]+"), "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("usage errors exit with code 2")
{
	CHECK(run({"series", "nosuch"}).code == 2);
	CHECK(run({"series"}).code == 2);
	CHECK(run({"verify", "nosuch"}).code == 2);
	CHECK(run({"series", "dt0", "--qmax"}).code == 2);
	CHECK(run({"series", "dt0", "--qmax", "x"}).code == 2);
	CHECK(run({"series", "dt0", "--format", "xml"}).code == 2);
	CHECK(run({"bogus"}).code == 2);
	CHECK(run({}).code == 2);
	CHECK(run({"series", "dt-pred", "--hmax", "2"}).code == 2);
}

TEST_CASE("series output is deterministic and round-trips")
{
	std::vector<std::string> args = {"series", "dt0", "--qmax", "3", "--pmax", "4",
	                                 "--K", "8", "--format", "json"};
	CliResult first = run(args);
	CliResult second = run(args);
	CHECK(first.code == 0);
	CHECK(first.out == second.out);

	QSeries parsed = series_from_json(first.out);
	QSeries direct = dt0(3, 4, 8, VertexRoute::Enumerated).series;
	auto cmp = compare(parsed, direct);
	CHECK(cmp.equal);
	CHECK(cmp.q_lo == -1);
	CHECK(cmp.q_hi == 3);
}

TEST_CASE("series text format prints windows")
{
	CliResult r = run({"series", "delta", "--qmax", "4"});
	CHECK(r.code == 0);
	CHECK(r.out.find("delta") != std::string::npos);
	CHECK(r.out.find("q^1") != std::string::npos);
	CHECK(r.out.find("-24") != std::string::npos);
}

TEST_CASE("closed-route series avoid the enumerator")
{
	CliResult r = run({"series", "dt1", "--qmax", "3", "--route", "closed", "--format", "json"});
	CHECK(r.code == 0);
	CHECK(r.out.find("\"q_offset\": -1") != std::string::npos);
}

TEST_CASE("verify single check and full suite")
{
	CliResult lemma = run({"verify", "lemma-f", "--qmax", "2", "--K", "6"});
	CHECK(lemma.code == 0);
	CHECK(lemma.out.find("[pass] lemma-f") != std::string::npos);

	CliResult all = run({"verify", "all", "--qmax", "2", "--K", "6", "--format", "json"});
	CHECK(all.code == 0);
	CHECK(all.out.find("\"all_pass\": true") != std::string::npos);

	CliResult again = run({"verify", "all", "--qmax", "2", "--K", "6", "--format", "json"});
	CHECK(mask_elapsed(all.out) == mask_elapsed(again.out));
}

TEST_CASE("budget exhaustion exits 3, flag beats environment")
{
	/* Odd K values are fresh memo keys within this process, so the
	 * enumerator actually runs and hits the budget. */
	CliResult starved = run({"verify", "macmahon", "--K", "9", "--budget", "10"});
	CHECK(starved.code == 3);
	CHECK(starved.out.find("[budget] macmahon") != std::string::npos);

	setenv("IGUSA_VERTEX_BUDGET", "10", 1);
	CliResult env_starved = run({"verify", "macmahon", "--K", "11"});
	CHECK(env_starved.code == 3);
	CliResult flag_wins = run({"verify", "macmahon", "--K", "11", "--budget", "1000000"});
	CHECK(flag_wins.code == 0);
	unsetenv("IGUSA_VERTEX_BUDGET");

	CliResult series_starved = run({"series", "dt0", "--qmax", "3", "--K", "13", "--budget", "10"});
	CHECK(series_starved.code == 3);
}

TEST_CASE("every series name is servable")
{
	const std::vector<std::string> names = {"delta",        "wp",          "f2neginv",
	                                        "zk3",          "chi10-layer", "dt-pred",
	                                        "dt0-hat",      "dt0",         "dt0-closed",
	                                        "dt1-vert-hat", "dt1-diag-hat", "dt1",
	                                        "dt1-closed"};
	for (const auto& name : names) {
		CliResult r = run({"series", name, "--qmax", "2", "--pmax", "3", "--K", "6",
		                   "--format", "json"});
		INFO(name);
		CHECK(r.code == 0);
		CHECK(r.out.find("\"series\": \"" + name + "\"") != std::string::npos);
	}
}

TEST_CASE("json reports carry mismatch structure or null")
{
	CliResult r = run({"verify", "nodal", "--qmax", "1", "--K", "6", "--format", "json"});
	CHECK(r.code == 0);
	CHECK(r.out.find("\"first_mismatch\": null") != std::string::npos);
	CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
}
