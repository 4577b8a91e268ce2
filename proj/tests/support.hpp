#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace uavlink::testing {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
}

inline std::filesystem::path golden(const std::string& name) {
    return std::filesystem::path(UAVLINK_GOLDEN_DIR) / name;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() /
               ("uavlink_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// Runs the CLI with the given argument string; returns its exit status.
inline int run_cli(const std::string& args, const std::filesystem::path& stdout_path = "/dev/null",
                   const std::filesystem::path& stderr_path = "/dev/null") {
    const std::string cmd = std::string("\"") + UAVLINK_CLI + "\" " + args + " > \"" +
                            stdout_path.string() + "\" 2> \"" + stderr_path.string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace uavlink::testing
