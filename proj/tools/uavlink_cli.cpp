// uavlink: packet-loss sweeps, curve fitting, packet-size prediction and
// adaptive transmission traces for static UAV swarms.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uavlink/commands.hpp"
#include "uavlink/config.hpp"
#include "uavlink/error.hpp"

namespace {

std::string kebab(std::string key) {
    for (auto& ch : key) {
        if (ch == '_') ch = '-';
    }
    return key;
}

struct SubcommandOptions {
    uavlink::Subcommand command;
    CLI::App* app = nullptr;
    std::string config_path;
    bool print_config = false;
    std::map<std::string, std::string> values;  // flag -> text
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link-level packet-loss simulator for ad-hoc UAV networks"};
    app.require_subcommand(1);

    std::vector<std::unique_ptr<SubcommandOptions>> subs;
    for (auto command : uavlink::all_subcommands()) {
        auto opts = std::make_unique<SubcommandOptions>();
        opts->command = command;
        opts->app = app.add_subcommand(std::string(uavlink::to_string(command)));
        opts->app->add_option("--config", opts->config_path, "JSON configuration file")->check(CLI::ExistingFile);
        opts->app->add_flag("--print-config", opts->print_config, "Print the effective configuration and exit");
        for (const auto& key : uavlink::config_keys()) {
            opts->app->add_option("--" + kebab(key), opts->values[key])
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        }
        if (command == uavlink::Subcommand::Predict) {
            opts->app->add_option("--loss", opts->values["loss"], "Target loss, percent");
            opts->app->add_option("--power", opts->values["power"], "Transmit power, dBm");
        }
        subs.push_back(std::move(opts));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return uavlink::exit_code(uavlink::ErrorKind::Config);
    }

    for (const auto& opts : subs) {
        if (!opts->app->parsed()) continue;
        try {
            std::string file_contents;
            if (!opts->config_path.empty()) {
                std::ifstream in(opts->config_path, std::ios::binary);
                if (!in) throw uavlink::ConfigError("config", "cannot read " + opts->config_path);
                std::ostringstream buf;
                buf << in.rdbuf();
                file_contents = buf.str();
            }
            std::vector<uavlink::FlagOverride> flags;
            for (const auto& [key, value] : opts->values) {
                const auto flag = key == "loss" || key == "power" ? key : kebab(key);
                if (opts->app->count("--" + flag) > 0) flags.emplace_back(key, value);
            }
            const auto config = uavlink::parse_config(file_contents, flags);
            if (opts->print_config) {
                std::cout << uavlink::serialize_config(config);
                return 0;
            }
            const auto outcome = uavlink::run_subcommand(opts->command, config);
            if (outcome.exit_code != 0) {
                std::cerr << outcome.diagnostic << '\n';
                return outcome.exit_code;
            }
            std::cout << outcome.document;
            return 0;
        } catch (const uavlink::Error& e) {
            std::cerr << uavlink::to_string(opts->command) << ": " << uavlink::to_string(e.kind()) << ": "
                      << e.what() << '\n';
            return uavlink::exit_code(e.kind());
        }
    }
    return 1;
}
