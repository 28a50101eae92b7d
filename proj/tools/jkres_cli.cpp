#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jkres/io.hpp"

namespace {

using jkres::io::ojson;

ojson load_json(const std::string& path, const std::string& field) {
    std::ifstream in(path);
    if (!in) throw jkres::validation_error(field, "cannot open file '" + path + "'");
    try {
        return ojson::parse(in);
    } catch (const std::exception& e) {
        throw jkres::validation_error(field, "invalid JSON in '" + path + "': " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact iterated residues, constant terms and lattice sums over "
                 "integer hyperplane arrangements"};
    app.require_subcommand(1);

    jkres::io::JobSpec spec;
    std::string arrangement_path, function_path, output_path;

    struct SubNeeds {
        CLI::App* sub;
        bool arrangement = false;
        bool function = false;
    };
    std::vector<SubNeeds> subs;

    auto add = [&](const std::string& name, const std::string& desc, bool arr, bool fn) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (arr)
            sub->add_option("--arrangement", arrangement_path, "arrangement JSON file")
                ->required();
        if (fn)
            sub->add_option("--function", function_path, "function JSON file")->required();
        sub->add_option("--output", output_path, "write the result to a file instead of stdout");
        subs.push_back({sub, arr, fn});
        return sub;
    };

    add("bases", "list bases, no-broken-circuit bases and wall normals", true, false);
    add("diagonal-basis", "the verified diagonal basis of ordered bases", true, false);

    CLI::App* jk = add("jk-residue", "residue projection onto the diagonal basis", true, true);
    jk->add_option("--window-scale", spec.window_scale, "series window multiplier");

    add("decompose", "rewrite a product of forms over independent supports", true, true);

    CLI::App* ct = add("ct", "constant-term polynomial on the alcove of t", true, true);
    ct->add_option("--t", spec.t, "rational point, e.g. '1/3,2/7'")->required();
    ct->add_option("--window-scale", spec.window_scale, "series window multiplier");

    CLI::App* zsum = add("zsum", "exact normalized lattice sum as a multiple of (2*pi*i)^k",
                         true, true);
    zsum->add_option("--t", spec.t, "rational point, e.g. '1/3,2/7'");
    zsum->add_flag("--limit-zero", spec.limit_zero, "evaluate the polynomial at t = 0");
    zsum->add_option("--window-scale", spec.window_scale, "series window multiplier");

    CLI::App* oracle = add("oracle", "numeric brute-force lattice sum over a box", true, true);
    oracle->add_option("--t", spec.t, "rational point, e.g. '1/3,2/7'")->required();
    oracle->add_option("--radius", spec.radius, "box radius in the sup norm")->required();
    oracle->add_option("--z", spec.z, "complex offset point, e.g. '0.1+0.2i,0.3'");

    CLI::App* e1d = add("e1d", "closed form of the rank-1 kernel of order k", false, false);
    e1d->add_option("--k", spec.k, "kernel order, at most -1")->required();
    e1d->add_option("--t", spec.t, "rational t, e.g. '5/7'")->required();
    e1d->add_option("--z", spec.z, "complex evaluation point, e.g. '0.3+0.1i'");

    CLI::App* ke = add("kernel-eval", "numeric shifted-kernel residue sum at a point y",
                       true, true);
    ke->add_option("--t", spec.t, "rational point, e.g. '1/3,2/7'")->required();
    ke->add_option("--y", spec.y, "complex point, e.g. '0.5i,0.25'")->required();
    ke->add_option("--window-scale", spec.window_scale, "series window multiplier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    int code = 0;
    std::ostringstream buffer;
    try {
        for (const auto& entry : subs) {
            if (!app.got_subcommand(entry.sub)) continue;
            spec.command = entry.sub->get_name();
            if (entry.arrangement)
                spec.arrangement = load_json(arrangement_path, "arrangement");
            if (entry.function) spec.function = load_json(function_path, "function");
            break;
        }
        code = jkres::io::run_cli_job(spec, buffer);
    } catch (const jkres::validation_error& e) {
        ojson j;
        j["error"]["type"] = "validation";
        j["error"]["message"] = e.what();
        j["error"]["field"] = e.field();
        buffer << j.dump(2) << "\n";
        code = 2;
    }

    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "cannot write to '" << output_path << "'\n";
            return 2;
        }
        out << buffer.str();
    } else {
        std::cout << buffer.str();
    }
    return code;
}
