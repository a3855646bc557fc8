#include "revrec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "revrec/errors.hpp"

namespace revrec {

namespace {

std::string fixed(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string join_k(const std::vector<int>& ks) {
  std::string out;
  for (int k : ks) {
    if (!out.empty()) out += ',';
    out += std::to_string(k);
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Selection names in the order they are printed: baseline first.
std::vector<std::string> table_order(const EvalReport& report) {
  std::vector<std::string> names;
  for (const auto& sel : report.config.methods) {
    if (sel.is_revfinder()) names.push_back(sel.name());
  }
  for (const auto& sel : report.config.methods) {
    if (!sel.is_revfinder()) names.push_back(sel.name());
  }
  return names;
}

void append_table(std::ostringstream& out, const EvalReport& report,
                  const std::vector<MetricRow>& rows) {
  const auto names = table_order(report);
  std::size_t name_width = 6;
  for (const auto& n : names) name_width = std::max(name_width, n.size());
  name_width += 2;

  std::string header = pad("Method", name_width);
  for (int k : report.config.k_values) {
    header += lpad("Top-" + std::to_string(k), 8) + lpad("MRR", 8);
  }
  out << header << '\n' << std::string(header.size(), '-') << '\n';

  for (const auto& name : names) {
    std::string line = pad(name, name_width);
    for (int k : report.config.k_values) {
      auto it = std::find_if(rows.begin(), rows.end(),
                             [&](const MetricRow& r) { return r.method == name && r.k == k; });
      line += lpad(fixed(it->topk_accuracy, 3), 8) + lpad(fixed(it->mrr, 3), 8);
    }
    out << line << '\n';
  }
}

}  // namespace

std::string format_report_csv(const EvalReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  out << "# corpus=" << report.corpus_label << '\n';
  out << "# records=" << report.corpus_size << '\n';
  out << "# sampling=" << sampling_name(c.sampling) << '\n';
  out << "# seed=" << c.rng_seed << '\n';
  out << "# test_fraction=" << fixed(c.test_fraction, 6) << '\n';
  if (c.sampling == Sampling::kIncremental) out << "# steps=" << c.steps << '\n';
  out << "# k=" << join_k(c.k_values) << '\n';
  for (std::size_t i = 0; i < report.partitions.size(); ++i) {
    out << "# partition" << (i + 1) << "=history:" << report.partitions[i].history_size
        << ",test:" << report.partitions[i].test_size << '\n';
  }
  out << "method,k,topk_accuracy,mrr\n";
  for (const auto& row : report.rows) {
    out << row.method << ',' << row.k << ',' << fixed(row.topk_accuracy, 6) << ','
        << fixed(row.mrr, 6) << '\n';
  }
  return out.str();
}

std::string format_report_table(const EvalReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  out << "Corpus: " << report.corpus_label << " (" << report.corpus_size << " records)\n";
  out << "Sampling: " << sampling_name(c.sampling) << ", seed " << c.rng_seed
      << ", test fraction " << fixed(c.test_fraction, 2);
  if (c.sampling == Sampling::kIncremental) out << ", " << c.steps << " steps";
  out << "\n\n";
  append_table(out, report, report.rows);

  if (c.sampling == Sampling::kIncremental) {
    for (std::size_t s = 0; s < report.step_rows.size(); ++s) {
      out << "\nStep " << (s + 1) << " (history " << report.partitions[s].history_size
          << ", validation " << report.partitions[s].test_size << ")\n";
      append_table(out, report, report.step_rows[s]);
    }
  }
  return out.str();
}

void write_report(const EvalReport& report, const std::filesystem::path& path) {
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write report '" + p.string() + "'");
    out << text;
    if (!out) throw IoError("error writing report '" + p.string() + "'");
  };
  write(path, format_report_csv(report));
  auto text_path = path;
  text_path += ".txt";
  write(text_path, format_report_table(report));
}

}  // namespace revrec
