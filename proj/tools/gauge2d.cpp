#include "CLI11.hpp"

#include "gauge2d/errors.hpp"
#include "gauge2d/pipeline.hpp"
#include "gauge2d/report.hpp"
#include "gauge2d/sysfile.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gauge2d;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int analyze(const std::string& path, int max_k, std::string format,
            const std::string& expected_path)
{
    SystemFile f = parse_system_file(slurp(path));
    if (!f.system)
        throw std::runtime_error("'" + path
                                 + "' declares relations, not evolution; run reduce-pfaffian");
    PipelineOptions opts;
    opts.max_k = max_k >= 0 ? max_k : f.options.max_k;
    if (format.empty())
        format = f.options.format;

    PipelineResult r = run_pipeline(f.system, opts);
    ReportNode report = analysis_report(r);
    std::string machine = to_machine(report);
    std::cout << (format == "machine" ? machine : to_text(report));

    if (!expected_path.empty() && slurp(expected_path) != machine) {
        std::cerr << "fixture mismatch against '" << expected_path << "'\n";
        return 5;
    }
    if (!r.verified()) {
        std::cerr << "verification failed; see the checks section\n";
        return 5;
    }
    return 0;
}

int validate_file(const std::string& path)
{
    SystemFile f = parse_system_file(slurp(path));
    ReportNode root{"validation", "", {}};
    if (f.system) {
        ValidationReport rep = validate(*f.system, f.options.order_bound);
        root.add("ok", "yes");
        root.add("order_bound", std::to_string(rep.order_bound));
        root.add(system_report(*f.system));
    } else {
        auto omega = curvature(*f.theta);
        bool flat = true;
        for (const auto& row : omega)
            for (const auto& entries : row)
                for (const FieldElem& e : entries)
                    flat = flat && e.is_zero();
        root.add("ok", "yes");
        root.add("kind", "relations");
        root.add("integrable", flat ? "yes" : "no");
    }
    std::cout << to_text(root);
    return 0;
}

int reduce(const std::string& path, std::string format)
{
    SystemFile f = parse_system_file(slurp(path));
    if (!f.theta)
        throw std::runtime_error("'" + path + "' has no [theta] section to reduce");
    if (format.empty())
        format = f.options.format;
    PfaffianReduction red = pfaffian_to_cartan(*f.theta);
    ReportNode report = reduction_report(*f.theta, red);
    std::cout << (format == "machine" ? to_machine(report) : to_text(report));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gauge structure of two-dimensional evolution systems"};
    app.require_subcommand(1);

    std::string file, format, expected;
    int max_k = -1;

    CLI::App* cmd_analyze =
        app.add_subcommand("analyze", "compute and verify the gauge generators of a system");
    cmd_analyze->add_option("file", file, "system definition file")->required();
    cmd_analyze->add_option("--max-k", max_k, "stabilization budget");
    cmd_analyze->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd_analyze->add_option("--fixture-check", expected,
                            "machine report the analysis must reproduce byte for byte");

    CLI::App* cmd_validate =
        app.add_subcommand("validate", "check a system file for consistency");
    cmd_validate->add_option("file", file, "system definition file")->required();

    CLI::App* cmd_reduce = app.add_subcommand(
        "reduce-pfaffian", "rewrite first-order relations as an evolution system");
    cmd_reduce->add_option("file", file, "relation definition file")->required();
    cmd_reduce->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_analyze))
            return analyze(file, max_k, format, expected);
        if (app.got_subcommand(cmd_validate))
            return validate_file(file);
        return reduce(file, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const DecompositionIncomplete& e) {
        std::cerr << "decomposition incomplete: " << e.what() << "\n";
        return 6;
    } catch (const DegenerateRank& e) {
        std::cerr << "decomposition incomplete: " << e.what() << "\n";
        return 6;
    } catch (const ExpansionFailure& e) {
        std::cerr << "decomposition incomplete: " << e.what() << "\n";
        return 6;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
