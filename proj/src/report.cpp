#include "gauge2d/report.hpp"

#include "gauge2d/render.hpp"

#include <utility>

namespace gauge2d {

ReportNode& ReportNode::add(std::string k, std::string v)
{
    children.push_back(ReportNode{std::move(k), std::move(v), {}});
    return children.back();
}

ReportNode& ReportNode::add(ReportNode child)
{
    children.push_back(std::move(child));
    return children.back();
}

namespace {

std::string join(const std::vector<std::string>& names)
{
    std::string out;
    for (const std::string& n : names) {
        if (!out.empty())
            out += ", ";
        out += n;
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

} // namespace

ReportNode system_report(const CartanSystem& sys)
{
    ReportNode node{"system", "", {}};
    std::vector<std::string> names, constrained;
    for (const CartanSystem::Field& f : sys.fields()) {
        names.push_back(f.name);
        if (f.constrained)
            constrained.push_back(f.name);
    }
    node.add("fields", join(names));
    node.add("constrained", join(constrained));
    node.add("lambdas", join(sys.lambdas()));
    node.add("params", join(sys.params()));

    ReportNode evo{"evolution", "", {}};
    for (int i = 0; i < sys.n(); ++i) {
        JetCoord c = sys.field_coordinate(i);
        evo.add(sys.coord_name(c.kind, c.index), render(sys.z_evolution(i), sys));
    }
    node.add(std::move(evo));

    if (sys.m() > 0) {
        ReportNode con{"constraints", "", {}};
        for (int j = 0; j < sys.m(); ++j)
            con.add(sys.coord_name(JetKind::PhiJ, j), render(sys.z_constraint(j), sys));
        node.add(std::move(con));
    }
    return node;
}

namespace {

// Column I of the generator matrix, one operator per coordinate of the
// stacked (field, lambda) vector it acts on through the gauge parameter.
ReportNode generator_node(const PipelineResult& r, int I)
{
    const CartanSystem& sys = *r.sys;
    const OreMatrix& R = r.resolution.R_gen;
    ReportNode node{"generator_" + std::to_string(I + 1), "", {}};
    for (int i = 0; i < sys.n(); ++i) {
        JetCoord c = sys.field_coordinate(i);
        node.add(sys.coord_name(c.kind, c.index), render(R.at(i, I)));
    }
    for (int b = 0; b < sys.l(); ++b)
        node.add(sys.lambdas()[b], render(R.at(sys.n() + b, I)));
    return node;
}

void add_residuals(ReportNode& checks, const std::string& prefix, const CheckReport& rep)
{
    int i = 0;
    for (const Residual& res : rep.residuals)
        checks.add(prefix + "_residual_" + std::to_string(++i),
                   "entry (" + std::to_string(res.row) + ", " + std::to_string(res.col)
                       + ") = " + render(res.value));
}

} // namespace

ReportNode analysis_report(const PipelineResult& r)
{
    const CartanSystem& sys = *r.sys;
    const Resolution& res = r.resolution;
    ReportNode root{"analysis", "", {}};
    root.add(system_report(sys));

    {
        ReportNode depth{"stabilization", "", {}};
        depth.add("constraints", std::to_string(sys.l()));
        depth.add("K", std::to_string(r.history.K));
        root.add(std::move(depth));
    }
    {
        ReportNode gens{"generators", "", {}};
        gens.add("count", std::to_string(res.r1));
        for (int I = 0; I < res.r1; ++I)
            gens.add(generator_node(r, I));
        root.add(std::move(gens));
    }
    {
        // Column a of the relation matrix recombines the gauge parameters:
        // eps_I = Z[I][a] eta_a reproduces the zero variation.
        ReportNode rels{"relations", "", {}};
        rels.add("count", std::to_string(res.r2));
        for (int a = 0; a < res.r2; ++a) {
            ReportNode rel{"relation_" + std::to_string(a + 1), "", {}};
            for (int I = 0; I < res.r1; ++I)
                rel.add("generator_" + std::to_string(I + 1), render(res.Z_gen.at(I, a)));
            rels.add(std::move(rel));
        }
        root.add(std::move(rels));
    }
    {
        ReportNode checks{"checks", "", {}};
        checks.add("gauge", pass_fail(r.gauge.ok()));
        add_residuals(checks, "gauge", r.gauge);
        checks.add("reducibility", pass_fail(r.reducibility.ok()));
        add_residuals(checks, "reducibility", r.reducibility);
        if (r.reducibility.kernel_rank != 0)
            checks.add("dependent_relations", std::to_string(r.reducibility.kernel_rank));
        checks.add("rank_law", pass_fail(r.gauge.rank_law && r.reducibility.rank_law));
        checks.add("verified", yes_no(r.verified()));
        root.add(std::move(checks));
    }
    {
        ReportNode dof{"degrees_of_freedom", "", {}};
        dof.add("fields", std::to_string(r.dof.n));
        dof.add("constraints", std::to_string(r.dof.m));
        dof.add("gauge_rank", std::to_string(r.dof.rank_rbar));
        dof.add("count", std::to_string(r.dof.dof));
        dof.add("conjectural", yes_no(r.dof.conjectural));
        dof.add("consistent", yes_no(r.dof.consistent));
        root.add(std::move(dof));
    }
    {
        ReportNode notes{"notes", "", {}};
        if (sys.m() > 0)
            notes.add("note_" + std::to_string(notes.children.size() + 1),
                      "identities arising from the differential constraints act only on the "
                      "extension variables and are omitted from the generator list");
        if (!r.dof.consistent)
            notes.add("note_" + std::to_string(notes.children.size() + 1),
                      "a negative count signals an incomplete generating set");
        if (!notes.children.empty())
            root.add(std::move(notes));
    }
    return root;
}

ReportNode reduction_report(const PfaffianInput& input, const PfaffianReduction& red)
{
    ReportNode root{"reduction", "", {}};
    {
        ReportNode in{"input", "", {}};
        in.add("constrained", join(input.constrained));
        in.add("unconstrained", join(input.unconstrained));
        in.add("params", join(input.params));
        root.add(std::move(in));
    }
    root.add("rank", std::to_string(red.rank));
    {
        ReportNode kernel{"kernel", "", {}};
        kernel.add("count", std::to_string(static_cast<int>(red.kernel.size())));
        for (std::size_t v = 0; v < red.kernel.size(); ++v) {
            ReportNode dir{"direction_" + std::to_string(v + 1), "", {}};
            for (int a = 0; a < input.na(); ++a)
                dir.add(input.unconstrained[a], render(red.kernel[v][a], *red.system));
            kernel.add(std::move(dir));
        }
        root.add(std::move(kernel));
    }
    if (!red.warnings.empty()) {
        ReportNode warn{"warnings", "", {}};
        int i = 0;
        for (const std::string& w : red.warnings)
            warn.add("warning_" + std::to_string(++i), w);
        root.add(std::move(warn));
    }
    root.add(system_report(*red.system));
    return root;
}

namespace {

void write_machine(const ReportNode& n, int depth, std::string& out)
{
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    if (n.children.empty())
        out += n.value.empty() ? n.key + " =" : n.key + " = " + n.value;
    else
        out += n.key;
    out += "\n";
    for (const ReportNode& c : n.children)
        write_machine(c, depth + 1, out);
}

void write_text(const ReportNode& n, int depth, std::string& out)
{
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    if (n.children.empty()) {
        out += n.key + ": " + n.value + "\n";
        return;
    }
    out += n.key + "\n";
    for (const ReportNode& c : n.children)
        write_text(c, depth + 1, out);
}

} // namespace

std::string to_machine(const ReportNode& root)
{
    std::string out;
    write_machine(root, 0, out);
    return out;
}

std::string to_text(const ReportNode& root)
{
    std::string out;
    out += root.key + "\n";
    out.append(root.key.size(), '=');
    out += "\n";
    for (const ReportNode& c : root.children) {
        out += "\n";
        write_text(c, 0, out);
    }
    return out;
}

} // namespace gauge2d
