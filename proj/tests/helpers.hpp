#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

inline std::string data_path(const std::string& name) {
    const char* d = std::getenv("TOPSNUT_DATA");
    return (d ? std::string(d) : std::string("data")) + "/" + name;
}

struct CliResult {
    int status = -1;
    std::string out;
};

// runs the installed binary with stderr folded into stdout
inline CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("TOPSNUT_BIN");
    if (!bin) throw std::runtime_error("TOPSNUT_BIN not set");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    CliResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}
