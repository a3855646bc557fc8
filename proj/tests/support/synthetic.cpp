#include "synthetic.hpp"

#include <array>
#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace revrec::testing {

namespace {

constexpr std::int64_t kBase = 1'380'000'000;  // 2013-09-24

const std::vector<std::string> kNetDirs = {"router", "socket", "firewall", "dhcp", "l3"};
const std::vector<std::string> kDbDirs = {"schema", "migration", "sqlalchemy", "api", "models"};
const std::vector<std::string> kFiles = {"agent", "driver", "manager", "plugin", "utils"};
const std::vector<std::string> kNetWords = {"socket", "packet", "routing", "subnet",
                                            "firewall", "dhcp", "port", "tunnel"};
const std::vector<std::string> kDbWords = {"schema", "migration", "query", "index",
                                           "transaction", "table", "column", "session"};
const std::vector<std::string> kSharedWords = {"please", "fix", "layering", "violation"};

const std::vector<std::string> kSmallPathTokens = {"a", "b", "c", "lib"};
const std::vector<std::string> kSmallExts = {".py", ".c", ""};
const std::vector<std::string> kSmallWords = {"api", "broken", "layer", "db", "fix",
                                              "the", "42", "cache", "Layer"};

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::string themed_comment(std::mt19937_64& rng, const std::vector<std::string>& own) {
  std::string c = pick(rng, own) + " " + pick(rng, own) + ", " + pick(rng, own) + ": " +
                  pick(rng, kSharedWords) + " the code.";
  return c;
}

}  // namespace

ReviewRecord make_record(std::string change_id, std::string file_path, std::string comment,
                         std::string reviewer_id, std::int64_t unix_seconds, std::string project,
                         std::string patch_id) {
  ReviewRecord r;
  r.change_id = std::move(change_id);
  r.patch_id = std::move(patch_id);
  r.file_path = std::move(file_path);
  r.comment = std::move(comment);
  r.reviewer_id = std::move(reviewer_id);
  r.timestamp = Timestamp{std::chrono::seconds{unix_seconds}};
  r.project = std::move(project);
  return r;
}

Corpus planted_corpus(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ReviewRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    // Alternate owners with a random phase so both are always present.
    bool net = (i % 2 == 0) != (std::uniform_int_distribution<int>(0, 3)(rng) == 0);
    std::string path = net ? "net/" + pick(rng, kNetDirs) + "/" + pick(rng, kFiles) + ".py"
                           : "db/" + pick(rng, kDbDirs) + "/" + pick(rng, kFiles) + ".py";
    std::string comment = themed_comment(rng, net ? kNetWords : kDbWords);
    records.push_back(make_record("change-" + std::to_string(i), path, comment,
                                  net ? "alice" : "bob",
                                  kBase + static_cast<std::int64_t>(i) * 86'400));
  }
  return Corpus("Synthetic", std::move(records));
}

Corpus late_owner_corpus() {
  struct Owner {
    const char* reviewer;
    const char* prefix;
    const char* word;
  };
  const std::array<Owner, 9> owners = {{
      {"P", "docs", "wording"},
      {"A", "net", "socket"},
      {"B", "db", "schema"},
      {"C", "api", "endpoint"},
      {"D", "ui", "widget"},
      {"E", "sched", "filter"},
      {"F", "virt", "hypervisor"},
      {"G", "image", "glance"},
      {"H", "auth", "token"},
  }};
  // Reviewer index per 1-based position.
  std::vector<int> who(101, 0);
  for (int p = 1; p <= 22; ++p) who[p] = 0;
  who[23] = 1; who[24] = 2; who[25] = 1;
  for (int p = 26; p <= 47; ++p) who[p] = 1 + (p % 2);
  who[48] = 3; who[49] = 4; who[50] = 3;
  for (int p = 51; p <= 72; ++p) who[p] = 1 + (p % 4);
  who[73] = 5; who[74] = 6; who[75] = 5;
  for (int p = 76; p <= 97; ++p) who[p] = 1 + (p % 6);
  who[98] = 7; who[99] = 8; who[100] = 7;

  std::vector<ReviewRecord> records;
  for (int p = 1; p <= 100; ++p) {
    const auto& o = owners[static_cast<std::size_t>(who[p])];
    std::string path = std::string(o.prefix) + "/module" + std::to_string(p % 3) + "/file" +
                       std::to_string(p % 5) + ".py";
    std::string comment = std::string(o.word) + " layering violation in " + o.prefix;
    records.push_back(make_record("late-" + std::to_string(p), path, comment, o.reviewer,
                                  kBase + p * 3'600));
  }
  return Corpus("Synthetic", std::move(records));
}

Corpus random_small_corpus(std::mt19937_64& rng, std::size_t n) {
  const std::size_t reviewers = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
  std::vector<ReviewRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    std::string path;
    const int depth = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int d = 0; d < depth; ++d) {
      if (d) path += '/';
      path += pick(rng, kSmallPathTokens);
    }
    path += pick(rng, kSmallExts);

    std::string comment;
    const int words = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int w = 0; w < words; ++w) {
      if (w) comment += ' ';
      comment += pick(rng, kSmallWords);
    }
    auto reviewer = "r" + std::to_string(std::uniform_int_distribution<std::size_t>(1, reviewers)(rng));
    auto change = "c" + std::to_string(std::uniform_int_distribution<int>(1, 6)(rng));
    auto ts = kBase + std::uniform_int_distribution<std::int64_t>(0, 8)(rng) * 86'400;
    records.push_back(make_record(change, path, comment, reviewer, ts, "Synthetic",
                                  std::to_string(i)));
  }
  return Corpus("Synthetic", std::move(records));
}

EmbeddingTable random_embedding_table(std::mt19937_64& rng, std::size_t dimension) {
  EmbeddingTable table(dimension);
  std::normal_distribution<float> normal(0.0f, 1.0f);
  std::vector<float> v(dimension);
  auto add_all = [&](const std::vector<std::string>& words) {
    for (const auto& w : words) {
      std::string lower = w;
      for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      for (auto& x : v) x = normal(rng);
      table.insert(lower, v);
    }
  };
  add_all(kNetWords);
  add_all(kDbWords);
  add_all(kSharedWords);
  // Leave "cache" out of vocabulary on purpose.
  add_all({"api", "broken", "layer", "db", "fix", "code"});
  return table;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("revrec-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace revrec::testing
