#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclo3/cli.hpp"

using namespace cyclo3;

namespace {

int invoke(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "cyclo3");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, FullPipelineAtS1) {
  const auto path = temp("cyclo3_s1.json");
  EXPECT_EQ(invoke({"verify", "--s", "1", "--all", "--json", path.string()}), cli::kExitPass);
  const auto cat = import_catalog(path.string());
  std::vector<std::string> ids;
  for (const auto& r : cat.schemes) {
    ids.push_back(r.id);
    EXPECT_EQ(r.P * r.Q, r.order * IntMatrix::identity(r.P.rows())) << r.id;
    EXPECT_TRUE(verify_record(r).passed()) << r.id;
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"thm1", "thm2i", "thm2ii", "dual1", "dual2i", "im10"}));
  EXPECT_EQ(cat.header.at("status"), "pass");
  EXPECT_EQ(cat.dump(), slurp(path));
}

TEST(Cli, ExplicitModulus) { EXPECT_EQ(invoke({"verify", "--s", "1", "--targets", "thm1", "--poly-f", "b"}), 0); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--s", "0"}), cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--s", "0", "--all"}), cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--s", "3", "--targets", "thm2ii"}), cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--s", "6", "--all"}), cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--s", "1", "--targets", "nope"}), cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--s", "1", "--all", "--poly-f", "f"}), cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}), cli::kExitUsage);
}

TEST(Cli, DeterministicCatalog) {
  const auto a = temp("cyclo3_a.json"), b = temp("cyclo3_b.json");
  ASSERT_EQ(invoke({"verify", "--s", "2", "--all", "--json", a.string()}), 0);
  ASSERT_EQ(invoke({"verify", "--s", "2", "--all", "--threads", "3", "--json", b.string()}), 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, SkipsOutOfReachFieldsUnderAll) {
  std::string out;
  EXPECT_EQ(invoke({"verify", "--s", "3", "--targets", "thm1,partition"}, &out), 0);
  EXPECT_EQ(invoke({"verify", "--s", "5", "--targets", "fields,partition,thm1"}, &out), 0);
}

TEST(Catalog, LargeIntegersAsStrings) {
  EXPECT_TRUE(catalog::integer(BigInt(1) << 60).is_string());
  EXPECT_TRUE(catalog::integer(BigInt(12345)).is_number_integer());
  EXPECT_EQ(catalog::parse_integer(catalog::integer(-(BigInt(1) << 70))), -(BigInt(1) << 70));
}

TEST(Catalog, GroupRingAndCyclotomicRoundTrip) {
  const ZM a = ZM::from_set(7, std::vector<std::uint64_t>{1, 2, 4});
  EXPECT_EQ(group_ring_from_json(to_json(a)), a);
  const auto R = make_cyclotomic_ring(21);
  const auto z = CyclotomicInteger::zeta_power(R, 5).pow(3) + CyclotomicInteger::rational(R, BigInt(1) << 80);
  EXPECT_EQ(cyclotomic_from_json(R, to_json(z)), z);
  EXPECT_THROW(cyclotomic_from_json(make_cyclotomic_ring(7), to_json(z)), std::invalid_argument);
}
