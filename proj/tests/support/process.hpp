#pragma once

// Runs the CLI binary (path from RKCS_CLI_PATH) through /bin/sh, capturing
// stdout and stderr separately.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace proc {

struct Result {
    int status = -1;
    std::string out;
    std::string err;
};

inline std::string quote(const std::string& s) {
    std::string q = "'";
    for (const char c : s) {
        if (c == '\'') q += "'\\''";
        else q += c;
    }
    return q + "'";
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Result run(const std::vector<std::string>& args, const std::map<std::string, std::string>& env = {}) {
    static int counter = 0;
    const auto err_path =
        std::filesystem::temp_directory_path() / ("rkcs_stderr_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::string cmd;
    for (const auto& [k, v] : env) cmd += k + "=" + quote(v) + " ";
    cmd += quote(RKCS_CLI_PATH);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>" + quote(err_path.string());

    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.err = slurp(err_path);
    std::filesystem::remove(err_path);
    return r;
}

inline std::string strip_lines_containing(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        if (line.find(needle) == std::string::npos) out += line + '\n';
    }
    return out;
}

}  // namespace proc
