#pragma once

// Command-line front end: JSON documents in, deterministic text out.
//
// Exit codes: 0 success or check passed, 1 check failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rankdual/ground.hpp"
#include "rankdual/structures.hpp"

namespace rankdual::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Input document error carrying a location: "line:col" for syntax errors,
/// a JSON pointer for semantic ones.
class DocumentError : public InputError {
 public:
  DocumentError(std::string source, std::string location, const std::string& message);
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Reads any document kind and materializes its rank table.
RankTable read_rank_table(std::string_view text, const std::string& source = "<input>");
RootedGraph read_rooted_graph(std::string_view text, const std::string& source = "<input>");
Tree read_tree(std::string_view text, const std::string& source = "<input>");

/// Rank-table document, one subset per line in mask order.
std::string write_rank_table(const RankTable& g);

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankdual::cli
