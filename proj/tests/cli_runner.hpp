#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace entorder::test_support {

struct CliResult {
  int exit_code;
  std::string output;  // standard output only
};

inline const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("ENTORDER_CLI");
    if (env == nullptr || *env == '\0') {
      throw std::runtime_error(
          "ENTORDER_CLI must point at the command-line binary");
    }
    return std::string(env);
  }();
  return path;
}

// Runs the CLI with the given argument string; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  const std::string command = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    output.append(buffer, got);
  }
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

// Writes content to a unique temp file, removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("entorder_test_" + std::to_string(getpid()) + "_" +
              std::to_string(counter++) + ".json"))
                .string();
    std::ofstream out(path_);
    out << content;
  }

  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }

  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace entorder::test_support
