#include "igusa/cli.hpp"

#include "igusa/dtcalc.hpp"
#include "igusa/jsonio.hpp"
#include "igusa/verify.hpp"

#include <cstdlib>
#include <ostream>
#include <set>
#include <string>

namespace igusa {

namespace {

struct Options {
	std::string subcommand;
	std::string target;
	int q_max = 6;
	int p_max = 6;
	int K = 8;
	int h_max = 1;
	VertexRoute route = VertexRoute::Enumerated;
	long long budget = 10'000'000;
	std::string format = "text";
	bool explicit_q = false;
	bool explicit_route = false;
};

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

int parse_int(const std::string& v, const std::string& flag)
{
	size_t pos = 0;
	int out;
	try {
		out = std::stoi(v, &pos);
	} catch (const std::exception&) {
		throw UsageError("invalid integer for " + flag + ": " + v);
	}
	if (pos != v.size()) throw UsageError("invalid integer for " + flag + ": " + v);
	return out;
}

Options parse(const std::vector<std::string>& args)
{
	Options o;
	if (const char* env = std::getenv("IGUSA_VERTEX_BUDGET")) {
		try {
			o.budget = std::stoll(env);
		} catch (const std::exception&) {
			throw UsageError("invalid IGUSA_VERTEX_BUDGET value");
		}
	}

	size_t i = 0;
	auto next_value = [&](const std::string& flag) -> std::string {
		if (i + 1 >= args.size()) throw UsageError("missing value for " + flag);
		return args[++i];
	};
	for (; i < args.size(); ++i) {
		const std::string& a = args[i];
		if (a == "--qmax") {
			o.q_max = parse_int(next_value(a), a);
			o.explicit_q = true;
		} else if (a == "--pmax") {
			o.p_max = parse_int(next_value(a), a);
		} else if (a == "--K") {
			o.K = parse_int(next_value(a), a);
		} else if (a == "--hmax") {
			o.h_max = parse_int(next_value(a), a);
		} else if (a == "--budget") {
			o.budget = parse_int(next_value(a), a);
		} else if (a == "--route") {
			std::string v = next_value(a);
			if (v == "vertex")
				o.route = VertexRoute::Enumerated;
			else if (v == "closed")
				o.route = VertexRoute::ClosedForm;
			else
				throw UsageError("--route must be vertex or closed");
			o.explicit_route = true;
		} else if (a == "--format") {
			o.format = next_value(a);
			if (o.format != "json" && o.format != "text")
				throw UsageError("--format must be json or text");
		} else if (!a.empty() && a[0] == '-') {
			throw UsageError("unknown flag: " + a);
		} else if (o.subcommand.empty()) {
			o.subcommand = a;
		} else if (o.target.empty()) {
			o.target = a;
		} else {
			throw UsageError("unexpected argument: " + a);
		}
	}
	if (o.subcommand.empty()) throw UsageError("usage: igusa <series|verify> <name> [flags]");
	return o;
}

const std::set<std::string> kVertexBacked = {"dt0-hat", "dt0", "dt1-vert-hat", "dt1"};

QSeries build_series(const Options& o, int& k_used)
{
	const std::string& n = o.target;
	const EnumLimits limits{o.budget};
	k_used = 0;
	if (n == "delta") return delta_series(o.q_max).truncated_q(o.q_max);
	if (n == "wp") return weierstrass_p(o.q_max, o.p_max);
	if (n == "f2neginv") return f_squared_neg_inv(o.q_max, o.p_max);
	if (n == "zk3") return elliptic_genus_z(o.q_max, o.p_max);
	if (n == "chi10-layer") {
		if (o.h_max < 1) throw UsageError("chi10-layer: --hmax must be >= 1");
		TriSeries tri = chi10_tri(o.q_max, o.p_max, o.h_max);
		return tri.layers[static_cast<size_t>(o.h_max - 1)];
	}
	if (n == "dt-pred") {
		if (o.h_max < 0 || o.h_max > 1) throw UsageError("dt-pred: --hmax selects h and must be 0 or 1");
		return dt_prediction(o.h_max, o.q_max, o.p_max);
	}
	if (kVertexBacked.count(n)) k_used = (o.route == VertexRoute::Enumerated) ? o.K : 0;
	if (n == "dt0-hat") return dt0_hat(o.q_max, o.p_max, o.K, o.route, limits).series;
	if (n == "dt0") return dt0(o.q_max, o.p_max, o.K, o.route, limits).series;
	if (n == "dt0-closed") return dt0_closed(o.q_max, o.p_max).series;
	if (n == "dt1-vert-hat") return dt1_vertical_hat(o.q_max, o.p_max, o.K, o.route, limits).series;
	if (n == "dt1-diag-hat") return dt1_diag_hat(o.q_max).series;
	if (n == "dt1") return dt1(o.q_max, o.p_max, o.K, o.route, limits).series;
	if (n == "dt1-closed") return dt1_closed(o.q_max, o.p_max).series;
	throw UsageError("unknown series: " + n);
}

int run_series(const Options& o, std::ostream& out)
{
	int k_used = 0;
	QSeries s = build_series(o, k_used);
	SeriesPrintParams pp{o.q_max, -o.p_max, o.p_max, k_used};
	if (o.format == "json")
		out << series_to_json(o.target, s, pp);
	else
		out << series_to_text(o.target, s, pp);
	return 0;
}

int run_verify(const Options& o, std::ostream& out)
{
	CheckParams params;
	params.q_max = o.explicit_q ? o.q_max : 4;
	params.p_max = o.p_max;
	params.K = o.K;
	params.route = o.explicit_route ? o.route : VertexRoute::ClosedForm;
	params.limits = EnumLimits{o.budget};

	std::vector<CheckReport> reports;
	if (o.target == "all" || o.target.empty()) {
		reports = run_all_checks(params, o.explicit_q);
	} else {
		auto r = run_check_by_name(o.target, params);
		if (!r) throw UsageError("unknown check: " + o.target);
		reports.push_back(*r);
	}

	if (o.format == "json")
		out << reports_to_json(reports);
	else
		out << reports_to_text(reports);

	bool any_fail = false, any_budget = false;
	for (const auto& r : reports) {
		any_fail = any_fail || (r.status == CheckReport::Status::Fail);
		any_budget = any_budget || (r.status == CheckReport::Status::Budget);
	}
	if (any_fail) return 1;
	if (any_budget) return 3;
	return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	try {
		Options o = parse(args);
		if (o.subcommand == "series") {
			if (o.target.empty()) throw UsageError("series: missing series name");
			return run_series(o, out);
		}
		if (o.subcommand == "verify") return run_verify(o, out);
		throw UsageError("unknown subcommand: " + o.subcommand);
	} catch (const UsageError& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	} catch (const BudgetExceeded& e) {
		err << "error: enumeration budget exceeded after " << e.states_visited << " states\n";
		return 3;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

}  // namespace igusa
