#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "lauricella/cli.hpp"
#include "oracle_values.hpp"

using namespace lauricella::cli;
using nlohmann::json;

namespace {

const std::string kData = LAURICELLA_TEST_DATA;

Report run_tokens(const std::string& verb, const std::vector<std::string>& tokens, Options opts = {}) {
  return run(make_command(verb, tokens), opts);
}

double real_of(const Report& r, const std::string& key) {
  const Field* f = r.find(key);
  if (!f) throw std::runtime_error("no field " + key);
  return std::get<double>(*f);
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = std::string(LAURICELLA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(CliRun, EvalFaMatchesOracle) {
  const Report r = run_tokens("eval-fa", {"a=0.3", "b=0.2,0.4", "c=0.7,0.9", "x=0.1,0.1"});
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_NEAR(real_of(r, "value"), oracle::kFa2, 1e-13);
  const Report d = run_tokens("eval-fa", {"a=0.3", "b=0.2,0.4", "c=0.7,0.9", "x=0.1,0.1", "method=direct"});
  EXPECT_NEAR(real_of(d, "value"), oracle::kFa2, 1e-13);
}

TEST(CliRun, EvalFbMethods) {
  for (const char* method : {"decomposed", "direct", "recurrent"}) {
    const Report r = run_tokens("eval-fb", {"a=0.4,0.5", "b=0.3,0.6", "c=1.7", "x=0.2,0.15", std::string("method=") + method});
    EXPECT_EQ(r.exit_code, kOk) << method;
    EXPECT_NEAR(real_of(r, "value"), oracle::kFb2, 1e-12) << method;
  }
}

TEST(CliRun, ErrorsMapToExitCodes) {
  EXPECT_EQ(run_tokens("eval-fa", {"a=0.3", "b=0.2,0.4", "c=0.7,0.9", "x=0.6,0.6"}).exit_code, kDomainError);
  EXPECT_EQ(run_tokens("eval-fa", {"a=0.3", "b=0.2", "c=-1", "x=0.1"}).exit_code, kDomainError);
  EXPECT_EQ(run_tokens("eval-fa", {"a=0.3", "b=0.2", "c=0.7"}).exit_code, kUsage);
  EXPECT_EQ(run_tokens("eval-fa", {"a=0.3", "b=0.2", "c=0.7", "x=0.1", "colour=red"}).exit_code, kUsage);
  EXPECT_EQ(run_tokens("eval-fa", {"a=zero", "b=0.2", "c=0.7", "x=0.1"}).exit_code, kUsage);
  EXPECT_EQ(run_tokens("eval-fa", {"a=0.3", "b=0.2,0.4", "c=0.7,0.9", "x=0.45,0.45", "method=direct", "max_degree=5"}).exit_code, kNonConvergence);
  EXPECT_EQ(run_tokens("verify-lemma2", {"variant=fa", "a=2", "b=0.3,0.4", "tol=1e-30"}).exit_code, kMismatch);
  EXPECT_EQ(run_tokens("residual", {"x=0.5,0.2", "xi=0.5,0.2"}).exit_code, kDomainError);
  EXPECT_THROW(make_command("eval-fa", {"a"}), UsageError);
  EXPECT_THROW(make_command("eval-fa", {"a=1", "a=2"}), UsageError);
  EXPECT_THROW(parse_command("frobnicate a=1"), UsageError);

  const Report e = run_tokens("eval-fa", {"a=0.3", "b=0.2,0.4", "c=0.7,0.9", "x=0.6,0.6"});
  ASSERT_NE(e.find("error_type"), nullptr);
  EXPECT_EQ(std::get<std::string>(*e.find("error_type")), "DomainError");
}

TEST(CliRun, VerifyVerbsPass) {
  EXPECT_EQ(run_tokens("verify-lemma1", {"variant=fa", "n=3", "draws=3"}).exit_code, kOk);
  EXPECT_EQ(run_tokens("verify-lemma1", {"variant=expansion", "a=1.3", "b=0.6,1.1", "c=0.8,2.1"}).exit_code, kOk);
  EXPECT_EQ(run_tokens("verify-lemma2", {"variant=fb", "a=2", "b=0.3,0.4"}).exit_code, kOk);
  EXPECT_EQ(run_tokens("verify-lemma3", {"variant=fa", "a=2.5", "b=0.3", "c=1.1"}).exit_code, kOk);
  EXPECT_EQ(run_tokens("residual", {"x=0.5,0.2", "xi=0.3,0.6"}).exit_code, kOk);
  EXPECT_EQ(run_tokens("residual", {"x=0.5,0.2", "xi=0.3,0.6", "field=green"}).exit_code, kOk);
}

TEST(CliRun, SweepIsDeterministicPerSeed) {
  Options one;
  one.seed = 7;
  const std::string a = to_json(run_tokens("verify-lemma1", {"variant=fb", "n=2", "draws=4"}, one));
  const std::string b = to_json(run_tokens("verify-lemma1", {"variant=fb", "n=2", "draws=4"}, one));
  EXPECT_EQ(a, b);
  Options other;
  other.seed = 8;
  EXPECT_NE(a, to_json(run_tokens("verify-lemma1", {"variant=fb", "n=2", "draws=4"}, other)));
}

TEST(CliRun, RelTolPrecedence) {
  setenv("LAURICELLA_REL_TOL", "1e-4", 1);
  const auto terms = [](const Report& r) { return std::get<std::int64_t>(*r.find("terms_used")); };
  const std::vector<std::string> base{"a=0.3", "b=0.2", "c=0.7", "x=0.5"};
  const std::int64_t env_terms = terms(run_tokens("eval-fa", base));
  Options opts;
  opts.rel_tol = 1e-15;
  const std::int64_t flag_terms = terms(run_tokens("eval-fa", base, opts));
  auto with_key = base;
  with_key.push_back("rel_tol=1e-4");
  const std::int64_t key_terms = terms(run_tokens("eval-fa", with_key, opts));
  EXPECT_LT(env_terms, flag_terms);
  EXPECT_EQ(key_terms, env_terms);
  setenv("LAURICELLA_REL_TOL", "junk", 1);
  EXPECT_THROW(rel_tol_from_env(), UsageError);
  unsetenv("LAURICELLA_REL_TOL");
  EXPECT_FALSE(rel_tol_from_env().has_value());
}

TEST(CliSerialize, JsonRoundTripsRealsExactly) {
  const Report r = run_tokens("verify-lemma1", {"variant=fa", "n=3", "draws=4"});
  const json doc = json::parse(to_json(r));
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(doc["verb"], "verify-lemma1");
  EXPECT_EQ(doc["exit_code"], r.exit_code);
  EXPECT_EQ(doc["max_rel_err"].get<double>(), real_of(r, "max_rel_err"));
  ASSERT_EQ(doc["rows"].size(), r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (const auto& [k, v] : r.rows[i])
      if (const double* d = std::get_if<double>(&v)) EXPECT_EQ(doc["rows"][i][k].get<double>(), *d) << k;
}

TEST(CliSerialize, RealsAndNonFinite) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_real(oracle::kFa3Mixed)), oracle::kFa3Mixed);
  EXPECT_EQ(format_real(NAN), "nan");
  EXPECT_EQ(format_real(-INFINITY), "-inf");
  Report r;
  r.summary.emplace_back("value", INFINITY);
  r.summary.emplace_back("note", std::string("a \"quoted\"\nline"));
  const json doc = json::parse(to_json(r));
  EXPECT_EQ(doc["value"], "inf");
  EXPECT_EQ(doc["note"], "a \"quoted\"\nline");
}

TEST(CliSerialize, CsvLayout) {
  const Report r = run_tokens("eval-fa", {"a=0.3", "b=0.2", "c=0.7", "x=0.4"});
  const std::string csv = to_csv(r);
  std::istringstream in(csv);
  std::string header, values;
  std::getline(in, header);
  std::getline(in, values);
  EXPECT_EQ(header.rfind("verb,method,n,value", 0), 0u) << header;
  EXPECT_NE(header.find(",exit_code"), std::string::npos);
  EXPECT_EQ(values.rfind("eval-fa,decomposed,1,", 0), 0u) << values;

  const Report s = run_tokens("verify-lemma1", {"variant=fb", "n=2", "draws=3"});
  const std::string table = to_csv(s);
  EXPECT_NE(table.find("\n\n"), std::string::npos);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 1 + 3 + 1 + 2);
}

TEST(CliBatch, EmptyManifest) {
  std::ifstream in(kData + "/empty.manifest");
  const Report r = run_batch(in, {});
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(std::get<std::int64_t>(*r.find("commands")), 0);
  EXPECT_TRUE(r.rows.empty());
}

TEST(CliBatch, AllPass) {
  std::ifstream in(kData + "/passes.manifest");
  const Report r = run_batch(in, {});
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(std::get<std::int64_t>(*r.find("passed")), 3);
  ASSERT_EQ(r.children.size(), 3u);
  EXPECT_EQ(std::get<std::int64_t>(*r.children[1].find("line")), 4);
}

TEST(CliBatch, FirstFailureSetsExitCode) {
  std::ifstream in(kData + "/mixed.manifest");
  const Report r = run_batch(in, {});
  EXPECT_EQ(r.exit_code, kDomainError);
  EXPECT_EQ(std::get<std::int64_t>(*r.find("passed")), 1);
  EXPECT_EQ(std::get<std::int64_t>(*r.find("failed")), 2);
  EXPECT_EQ(std::get<std::int64_t>(*r.find("malformed")), 1);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(std::get<std::string>(r.rows[2][2].second), "malformed");
  EXPECT_EQ(std::get<std::int64_t>(r.rows[3][3].second), kUsage);
}

TEST(CliBinary, ExitCodesAndOutput) {
  Shell ok = shell("eval-fa a=0.3 b=0.2,0.4 c=0.7,0.9 x=0.1,0.1");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NEAR(json::parse(ok.out)["value"].get<double>(), oracle::kFa2, 1e-13);

  EXPECT_EQ(shell("eval-fa a=0.3 b=0.2 c=0.7 x=1.2").code, 1);
  EXPECT_EQ(shell("eval-fa a=0.3 b=0.2,0.4 c=0.7,0.9 x=0.45,0.45 method=direct max_degree=5").code, 2);
  EXPECT_EQ(shell("verify-lemma2 variant=fa a=2 b=0.3,0.4 tol=1e-30").code, 3);
  EXPECT_EQ(shell("").code, 64);
  EXPECT_EQ(shell("nonsense").code, 64);
  EXPECT_EQ(shell("eval-fa a").code, 64);
  EXPECT_EQ(shell("--format xml eval-fa a=1 b=1 c=1 x=0.1").code, 64);
  EXPECT_EQ(shell("batch " + kData + "/missing.manifest").code, 64);
}

TEST(CliBinary, CsvBatchAndConfig) {
  Shell csv = shell("--format csv eval-fb a=0.4 b=0.3 c=1.7 x=0.2");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("verb,", 0), 0u);

  Shell batch = shell("batch " + kData + "/mixed.manifest");
  EXPECT_EQ(batch.code, 1);
  EXPECT_EQ(json::parse(batch.out)["commands"].size(), 3u);

  Shell holm = shell("--config " + kData + "/holmgren_m2.json solve-holmgren");
  EXPECT_EQ(holm.code, 0);
  const json doc = json::parse(holm.out);
  EXPECT_LE(doc["max_rel_err"].get<double>(), 1e-3);
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(shell("--config " + kData + "/holmgren_m2.json solve-holmgren case=linear").code, 0);
  EXPECT_EQ(shell("--config " + kData + "/missing.json solve-holmgren").code, 1);
}
