#include "jetvar/cli_driver.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    for (char c : csv) {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> read_stdin_lines() {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides whether given jet-space functions are variational derivatives of a "
                 "local functional (Helmholtz self-adjointness and the extended-space vanishing-"
                 "variation test), reconstructs Lagrangians, and verifies the graded identities "
                 "d^2 = 0 and dK + Kd = 0 on diagonal field-space forms."};
    app.require_subcommand(1);

    std::string coords = "x";
    std::string fields = "u";
    bool json = false;
    bool use_stdin = false;
    int max_order = 12;
    app.add_option("--coords", coords, "Comma-separated base coordinate names (single letters)");
    app.add_option("--fields", fields, "Comma-separated field names");
    app.add_flag("--json", json, "Emit the structured JSON document");
    app.add_flag("--stdin", use_stdin, "Read expressions from stdin, one per line");
    app.add_option("--max-order", max_order, "Reject parsed jet variables above this order");

    jetvar::CliRequest request;

    auto add_expr_subcommand = [&](const std::string& name, const std::string& description,
                                   CLI::App* parent, const std::string& canonical) {
        CLI::App* sub = parent->add_subcommand(name, description);
        auto exprs = std::make_shared<std::vector<std::string>>();
        sub->add_option("expr", *exprs, "Input expression(s)");
        sub->callback([&request, exprs, canonical]() {
            request.subcommand = canonical;
            request.expressions = *exprs;
        });
        return sub;
    };

    add_expr_subcommand("el", "Euler-Lagrange components of a Lagrangian", &app, "el");
    add_expr_subcommand("helmholtz", "Self-adjointness test of the linearization", &app, "helmholtz");
    add_expr_subcommand("criterion", "Extended-space vanishing-variation test", &app, "criterion");
    add_expr_subcommand("reconstruct", "Homotopy reconstruction of a Lagrangian", &app, "reconstruct");
    add_expr_subcommand("divergence", "Total-divergence test of an integrand", &app, "divergence");

    CLI::App* adjoint = app.add_subcommand("adjoint", "Formal adjoint of a linearization");
    auto adjoint_exprs = std::make_shared<std::vector<std::string>>();
    adjoint->add_option("--of-frechet", *adjoint_exprs,
                        "Source-form components whose linearization to adjoin");
    adjoint->callback([&request, adjoint_exprs]() {
        request.subcommand = "adjoint";
        request.expressions = *adjoint_exprs;
    });

    CLI::App* dtotal =
        add_expr_subcommand("dtotal", "Total derivative in a coordinate direction", &app, "dtotal");
    auto direction = std::make_shared<std::string>();
    dtotal->add_option("--dir", *direction, "Coordinate direction")->required();

    CLI::App* forms = app.add_subcommand("forms", "Diagonal field-space forms");
    forms->require_subcommand(1);
    add_expr_subcommand("delta", "Exterior variation of a form", forms, "forms-delta");
    add_expr_subcommand("kmap", "Degree-lowering map to the extended signature", forms, "forms-kmap");
    add_expr_subcommand("sigma", "Poincare antiderivative of a closed form", forms, "forms-sigma");
    add_expr_subcommand("check-d2", "Verify delta(delta omega) = 0 mod divergence", forms,
                        "forms-check-d2");
    add_expr_subcommand("check-thm2", "Verify delta(K omega) + K(delta omega) = 0 mod divergence",
                        forms, "forms-check-thm2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) {  // --help
            app.exit(err);
            return 0;
        }
        std::cerr << err.what() << "\n";
        return 2;
    }

    request.coords = split_list(coords);
    request.fields = split_list(fields);
    request.json = json;
    request.max_order = max_order;
    request.direction = *direction;
    if (use_stdin) request.expressions = read_stdin_lines();

    jetvar::CliResponse response = jetvar::run(request);
    std::cout << (request.json ? jetvar::render_json(response) : jetvar::render_human(response));
    return response.exit_status;
}
