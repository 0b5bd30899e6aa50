#include "ailc/csv.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include "ailc/errors.hpp"

namespace ailc {

std::string format_float17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// Most frequent selected model within one iteration, ties to the lowest
// index. Reported 1-based.
int j_star_mode(const IterationRecord& rec) {
  std::map<int, int> counts;
  for (const int j : rec.j_star) ++counts[j];
  int best = rec.j_star.front();
  int best_count = 0;
  for (const auto& [j, count] : counts) {
    if (count > best_count) {  // map iterates in index order, so ties keep the lowest
      best_count = count;
      best = j;
    }
  }
  return best + 1;
}

}  // namespace

std::string summary_csv(const ExperimentReport& report) {
  std::string out = "k,max_track_err,max_ident_err,j_star_mode\n";
  for (const IterationRecord& rec : report.iterations) {
    out += std::to_string(rec.k);
    out += ',';
    out += format_float17(rec.max_track_err);
    out += ',';
    out += format_float17(rec.max_ident_err);
    out += ',';
    out += std::to_string(j_star_mode(rec));
    out += '\n';
  }
  return out;
}

std::string trace_csv(const ExperimentReport& report) {
  std::string out = "k,t,x,x_m,u,e,e_hat_sel,j_star\n";
  const int n = report.iterations.empty()
                    ? 1
                    : static_cast<int>(report.iterations.front().states.cols());
  for (const IterationRecord& rec : report.iterations) {
    const int T = static_cast<int>(rec.inputs.size());
    for (int t = 0; t < T; ++t) {
      out += std::to_string(rec.k);
      out += ',';
      out += std::to_string(t);
      out += ',';
      out += format_float17(rec.states(t + 1, n - 1));
      out += ',';
      out += format_float17(rec.reference(t + 1));
      out += ',';
      out += format_float17(rec.inputs(t));
      out += ',';
      out += format_float17(rec.track_err(t));
      out += ',';
      out += format_float17(rec.sel_err(t));
      out += ',';
      out += std::to_string(rec.j_star[t] + 1);
      out += '\n';
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace ailc
