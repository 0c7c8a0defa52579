#include "doctest.h"

#include "gauge2d/errors.hpp"
#include "gauge2d/expr.hpp"
#include "gauge2d/pipeline.hpp"
#include "gauge2d/report.hpp"
#include "gauge2d/sysfile.hpp"

#include "helpers.hpp"

#include <fstream>
#include <sstream>

using namespace gauge2d;
using namespace testutil;

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(GAUGE2D_FIXTURE_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PipelineResult analyze_fixture(const std::string& name)
{
    SystemFile f = parse_system_file(fixture(name));
    PipelineOptions opts;
    opts.max_k = f.options.max_k;
    return run_pipeline(f.system, opts);
}

// Inverse of to_machine, so the tests can assert the format is lossless.
ReportNode parse_machine(const std::string& text)
{
    std::vector<ReportNode*> stack;
    ReportNode root;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t indent = line.find_first_not_of(' ');
        REQUIRE(indent != std::string::npos);
        REQUIRE(indent % 2 == 0);
        std::size_t depth = indent / 2;
        std::string body = line.substr(indent);
        ReportNode node;
        std::size_t eq = body.find(" =");
        if (eq == std::string::npos) {
            node.key = body;
        } else {
            node.key = body.substr(0, eq);
            node.value = eq + 3 <= body.size() ? body.substr(eq + 3) : "";
        }
        if (depth == 0) {
            REQUIRE(stack.empty());
            root = node;
            stack = {&root};
            continue;
        }
        REQUIRE(depth <= stack.size());
        stack.resize(depth);
        stack.back()->children.push_back(node);
        stack.push_back(&stack.back()->children.back());
    }
    return root;
}

bool node_equal(const ReportNode& a, const ReportNode& b)
{
    if (a.key != b.key || a.value != b.value || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!node_equal(a.children[i], b.children[i]))
            return false;
    return true;
}

const ReportNode& child(const ReportNode& n, const std::string& key)
{
    for (const ReportNode& c : n.children)
        if (c.key == key)
            return c;
    REQUIRE_MESSAGE(false, ("missing key " + key).c_str());
    return n;
}

void collect_leaves(const ReportNode& n, std::vector<const ReportNode*>& out)
{
    if (n.children.empty())
        out.push_back(&n);
    for (const ReportNode& c : n.children)
        collect_leaves(c, out);
}

} // namespace

TEST_CASE("the bundled fixture files load and analyze to the frozen counts")
{
    struct Expected {
        const char* file;
        int K, r1, r2, dof;
    };
    const Expected table[] = {
        {"quadratic.sys", 1, 2, 1, 0},
        {"quadratic_free.sys", 0, 1, 0, 0},
        {"linear.sys", 0, 1, 0, 0},
        {"integrable.sys", 0, 1, 0, 0},
        {"gaugeless.sys", 0, 0, 0, 1},
    };
    for (const Expected& e : table) {
        CAPTURE(e.file);
        PipelineResult r = analyze_fixture(e.file);
        CHECK(r.history.K == e.K);
        CHECK(r.resolution.r1 == e.r1);
        CHECK(r.resolution.r2 == e.r2);
        CHECK(r.dof.dof == e.dof);
        CHECK(r.verified());
        CHECK(r.resolution.r1 - r.resolution.r2 == r.sys->l());
    }
}

TEST_CASE("the broken fixture is rejected with a position")
{
    CHECK_THROWS_AS(parse_system_file(fixture("broken.sys")), ParseError);
}

TEST_CASE("the free generator matches the frozen pair of derivatives")
{
    PipelineResult r = analyze_fixture("quadratic_free.sys");
    const OreMatrix& R = r.resolution.R_gen;
    REQUIRE(R.rows() == 2);
    REQUIRE(R.cols() == 1);
    bool plus = R.at(0, 0) == OreOp::dbar(r.sys) && R.at(1, 0) == -OreOp::d(r.sys);
    bool minus = R.at(0, 0) == -OreOp::dbar(r.sys) && R.at(1, 0) == OreOp::d(r.sys);
    CHECK((plus || minus));
}

TEST_CASE("machine reports are byte stable and reparse losslessly")
{
    for (const char* name : {"quadratic.sys", "integrable.sys", "gaugeless.sys"}) {
        CAPTURE(name);
        std::string first = to_machine(analysis_report(analyze_fixture(name)));
        std::string second = to_machine(analysis_report(analyze_fixture(name)));
        CHECK(first == second);

        ReportNode tree = analysis_report(analyze_fixture(name));
        CHECK(node_equal(parse_machine(to_machine(tree)), tree));
    }
}

TEST_CASE("text and machine reports carry the same data")
{
    ReportNode tree = analysis_report(analyze_fixture("quadratic.sys"));
    std::string text = to_text(tree);
    std::vector<const ReportNode*> leaves;
    collect_leaves(tree, leaves);
    CHECK(!leaves.empty());
    for (const ReportNode* leaf : leaves) {
        CAPTURE(leaf->key);
        CHECK(text.find(leaf->key + ": " + leaf->value) != std::string::npos);
    }
}

TEST_CASE("reported operators reparse against the resolution")
{
    PipelineResult r = analyze_fixture("quadratic.sys");
    ReportNode tree = analysis_report(r);
    const CartanSystem& sys = *r.sys;

    const ReportNode& gens = child(tree, "generators");
    REQUIRE(child(gens, "count").value == "2");
    for (int I = 0; I < 2; ++I) {
        const ReportNode& g = child(gens, "generator_" + std::to_string(I + 1));
        CHECK(eval_operator(parse_expr(child(g, "phi").value), r.sys)
              == r.resolution.R_gen.at(0, I));
        CHECK(eval_operator(parse_expr(child(g, "lam").value), r.sys)
              == r.resolution.R_gen.at(sys.n(), I));
    }

    const ReportNode& rels = child(tree, "relations");
    REQUIRE(child(rels, "count").value == "1");
    const ReportNode& rel = child(rels, "relation_1");
    for (int I = 0; I < 2; ++I)
        CHECK(eval_operator(parse_expr(child(rel, "generator_" + std::to_string(I + 1)).value),
                            r.sys)
              == r.resolution.Z_gen.at(I, 0));
}

TEST_CASE("analysis reports flag failed checks")
{
    PipelineResult r = analyze_fixture("quadratic.sys");
    r.resolution.R_gen.set(0, 0, -r.resolution.R_gen.at(0, 0));
    r.gauge = check_gauge(r.lin, r.resolution);
    REQUIRE(!r.gauge.ok());
    ReportNode tree = analysis_report(r);
    const ReportNode& checks = child(tree, "checks");
    CHECK(child(checks, "gauge").value == "fail");
    CHECK(child(checks, "verified").value == "no");
    CHECK(child(checks, "gauge_residual_1").value.find("entry (") == 0);
}

TEST_CASE("the stabilization budget surfaces as its own failure class")
{
    SystemFile f = parse_system_file(fixture("quadratic.sys"));
    PipelineOptions opts;
    opts.max_k = 0;
    CHECK_THROWS_AS(run_pipeline(f.system, opts), BudgetExceeded);
}

TEST_CASE("the quadratic resolution does not specialize to the free coupling")
{
    PipelineResult generic = analyze_fixture("quadratic.sys");
    SpecializationReport rep = specialize_check(generic, "g", Rat(0));
    CHECK(rep.failed);
    CHECK(rep.generic_r1 == 2);
    CHECK(rep.fresh_r1 == 1);
    CHECK(rep.lost_columns + rep.substituted_r1 == 2);
    CHECK(rep.note.find("SpecializationFailure") != std::string::npos);
}

TEST_CASE("generic parameter values specialize cleanly")
{
    PipelineResult generic = analyze_fixture("quadratic.sys");
    SpecializationReport rep = specialize_check(generic, "g", Rat(1));
    CHECK(!rep.failed);
    CHECK(rep.lost_columns == 0);
    CHECK(rep.substituted_r1 == 2);
    CHECK(rep.fresh_r1 == 2);
    CHECK(rep.note.find("SpecializationFailure") == std::string::npos);
}

TEST_CASE("relation files reduce and the result analyzes end to end")
{
    SystemFile f = parse_system_file(fixture("contact.sys"));
    REQUIRE(f.theta.has_value());
    PfaffianReduction red = pfaffian_to_cartan(*f.theta);
    CHECK(red.rank == 1);
    CHECK(red.system->l() == 1);
    REQUIRE(red.warnings.size() == 1);

    ReportNode tree = reduction_report(*f.theta, red);
    CHECK(child(tree, "rank").value == "1");
    CHECK(node_equal(parse_machine(to_machine(tree)), tree));

    PipelineResult r = run_pipeline(red.system);
    CHECK(r.verified());
    CHECK(r.resolution.r1 == 1);
    CHECK(r.dof.dof == 1);

    ReportNode analysis = analysis_report(r);
    const ReportNode& notes = child(analysis, "notes");
    CHECK(child(notes, "note_1").value.find("extension variables") != std::string::npos);
}
