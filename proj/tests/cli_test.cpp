// Drives the installed CLI binary end to end through temp files. The binary
// path comes in through LINKPRED_CLI_PATH at compile time.

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include "cli_runner.hpp"
#include "linkpred/evaluate.hpp"
#include "linkpred/io.hpp"

namespace fs = std::filesystem;
using cli_runner::RunResult;
using cli_runner::slurp;
using cli_runner::spit;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = cli_runner::make_temp_dir("linkpred_cli"); }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  RunResult run(const std::string& args) const {
    return cli_runner::run_cli(LINKPRED_CLI_PATH, args, dir_);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateWritesGraphAndIsByteIdentical) {
  const std::string args = "generate --n 200 --m 2 --b 0 --seed 7 --out " +
                           path("g.edges").string();
  RunResult first = run(args);
  ASSERT_EQ(first.exit_code, 0) << first.err;
  // C(3,2) + 2 * 197.
  EXPECT_NE(first.out.find("edges 397"), std::string::npos);
  const std::string bytes = slurp(path("g.edges"));
  RunResult second = run(args);
  EXPECT_EQ(second.exit_code, 0);
  EXPECT_EQ(slurp(path("g.edges")), bytes);
  EXPECT_EQ(second.out, first.out);
}

TEST_F(CliTest, GenerateRejectsTooSmallNetwork) {
  RunResult r = run("generate --n 2 --m 3 --out " + path("g.edges").string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find("n_final"), std::string::npos);
}

TEST_F(CliTest, GenerateEmitsSplitFiles) {
  RunResult r = run("generate --n 300 --m 2 --seed 11 --out " + path("g.edges").string() +
                    " --t1 150 --t2 297 --n-pairs 100 --pos-cap 0.2 --pairs-out " +
                    path("split.pairs").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("split_pairs 100"), std::string::npos);
  const std::string split = slurp(path("split.pairs"));
  EXPECT_NE(split.find("# split t1=150 t2=297 seed=11"), std::string::npos);
  linkpred::QueryPairSet pairs = linkpred::io::read_pairs_file(path("split.pairs").string());
  EXPECT_EQ(pairs.pairs.size(), 100u);
  EXPECT_TRUE(pairs.has_labels());
}

TEST_F(CliTest, ScoreFormatsFixedPrecision) {
  spit(path("path.edges"), "0 1 10\n1 2 20\n");
  spit(path("q.pairs"), "0 2\n");
  RunResult pa = run("score --edges " + path("path.edges").string() + " --pairs " +
                     path("q.pairs").string() + " --method pa --out " +
                     path("pa.scores").string());
  ASSERT_EQ(pa.exit_code, 0) << pa.err;
  EXPECT_EQ(slurp(path("pa.scores")), "0 2 2.000000000000\n");

  RunResult aa = run("score --edges " + path("path.edges").string() + " --pairs " +
                     path("q.pairs").string() + " --method aa --out " +
                     path("aa.scores").string());
  ASSERT_EQ(aa.exit_code, 0) << aa.err;
  EXPECT_EQ(slurp(path("aa.scores")), "0 2 1.442695040889\n");
}

TEST_F(CliTest, ScoreAcceptsThetaWeighting) {
  spit(path("g.edges"), "0 1 0\n1 2 5\n0 2 10\n1 3 10\n");
  spit(path("q.pairs"), "0 3\n2 3\n");
  RunResult r = run("score --edges " + path("g.edges").string() + " --pairs " +
                    path("q.pairs").string() +
                    " --method pa --theta 0.0,0.45,3,6 --out " + path("s.out").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  // Weighted degrees: k_3 = f(1.0), k_0 = f(0) + f(1).
  const double f0 = 6.053445140625, f05 = 0.000011390625, f1 = 20.179187015625;
  linkpred::io::ScoreFile file = linkpred::io::read_score_file(path("s.out").string());
  EXPECT_NEAR(file.scores[0], (f0 + f1) + f1, 1e-6);
  EXPECT_NEAR(file.scores[1], (f05 + f1) + f1, 1e-6);
}

TEST_F(CliTest, ScoreUnknownMethodFails) {
  spit(path("path.edges"), "0 1 10\n");
  spit(path("q.pairs"), "0 1\n");
  RunResult r = run("score --edges " + path("path.edges").string() + " --pairs " +
                    path("q.pairs").string() + " --method xx --out " +
                    path("x.scores").string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find("unknown scoring method"), std::string::npos);
}

TEST_F(CliTest, PairIdsBeyondSnapshotCountAsIsolated) {
  // Without a declared node count the universe covers the pairs file, so a
  // node the snapshot has not seen yet scores as degree zero.
  spit(path("path.edges"), "0 1 10\n");
  spit(path("q.pairs"), "0 7\n");
  RunResult r = run("score --edges " + path("path.edges").string() + " --pairs " +
                    path("q.pairs").string() + " --method pa --out " +
                    path("x.scores").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(slurp(path("x.scores")), "0 7 1.000000000000\n");
}

TEST_F(CliTest, DeclaredNodeCountRejectsOutOfRangePairs) {
  spit(path("path.edges"), "0 1 10\n");
  spit(path("q.pairs"), "0 7\n");
  RunResult r = run("score --edges " + path("path.edges").string() + " --pairs " +
                    path("q.pairs").string() + " --node-count 2 --method pa --out " +
                    path("x.scores").string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find("out of range"), std::string::npos);
}

TEST_F(CliTest, SelfLoopRecordsWarnButDoNotFail) {
  spit(path("g.edges"), "0 1 1\n2 2 9\n1 2 2\n");
  spit(path("q.pairs"), "0 2\n");
  RunResult r = run("score --edges " + path("g.edges").string() + " --pairs " +
                    path("q.pairs").string() + " --method cn --out " +
                    path("s.out").string());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_NE(r.err.find("self-loop"), std::string::npos);
}

TEST_F(CliTest, MalformedEdgeFileFails) {
  spit(path("bad.edges"), "0 1 1\nbroken line here\n");
  spit(path("q.pairs"), "0 1\n");
  RunResult r = run("score --edges " + path("bad.edges").string() + " --pairs " +
                    path("q.pairs").string() + " --method pa --out " +
                    path("s.out").string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, CombineAucPerfectSeparation) {
  spit(path("s.scores"), "0 1 0.900000000000\n2 3 0.100000000000\n");
  spit(path("l.pairs"), "0 1 1\n2 3 0\n");
  RunResult r = run("combine-auc --scores " + path("s.scores").string() + " --labels " +
                    path("l.pairs").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("auc 1.00000"), std::string::npos);
  EXPECT_NE(r.out.find("positives 1"), std::string::npos);
  EXPECT_NE(r.out.find("negatives 1"), std::string::npos);
}

TEST_F(CliTest, CombineAucEpsZeroEqualsSecondFileAlone) {
  spit(path("a.scores"), "0 1 0.100000000000\n2 3 0.500000000000\n4 5 0.300000000000\n");
  spit(path("b.scores"), "0 1 0.700000000000\n2 3 0.200000000000\n4 5 0.400000000000\n");
  spit(path("l.pairs"), "0 1 1\n2 3 0\n4 5 1\n");
  RunResult blend = run("combine-auc --scores " + path("a.scores").string() +
                        " --scores-b " + path("b.scores").string() + " --eps 0 --labels " +
                        path("l.pairs").string());
  RunResult alone = run("combine-auc --scores " + path("b.scores").string() + " --labels " +
                        path("l.pairs").string());
  ASSERT_EQ(blend.exit_code, 0) << blend.err;
  ASSERT_EQ(alone.exit_code, 0) << alone.err;
  auto auc_line = [](const std::string& out) {
    const std::size_t at = out.find("auc ");
    return out.substr(at, out.find('\n', at) - at);
  };
  EXPECT_EQ(auc_line(blend.out), auc_line(alone.out));
}

TEST_F(CliTest, CombineAucChecksAlignment) {
  spit(path("a.scores"), "0 1 0.1\n2 3 0.5\n");
  spit(path("l.pairs"), "0 1 1\n9 3 0\n");
  RunResult r = run("combine-auc --scores " + path("a.scores").string() + " --labels " +
                    path("l.pairs").string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find("mismatch"), std::string::npos);

  spit(path("u.pairs"), "0 1\n2 3\n");
  RunResult unlabeled = run("combine-auc --scores " + path("a.scores").string() +
                            " --labels " + path("u.pairs").string());
  EXPECT_NE(unlabeled.exit_code, 0);
}

TEST_F(CliTest, ScoreFileRoundTripMatchesInMemoryAuc) {
  RunResult gen = run("generate --n 150 --m 2 --seed 3 --out " + path("g.edges").string() +
                      " --t1 80 --t2 147 --n-pairs 60 --pos-cap 0.3 --pairs-out " +
                      path("split.pairs").string());
  ASSERT_EQ(gen.exit_code, 0) << gen.err;
  RunResult sc = run("score --edges " + path("g.edges").string() + " --pairs " +
                     path("split.pairs").string() + " --method pa --out " +
                     path("pa.scores").string());
  ASSERT_EQ(sc.exit_code, 0) << sc.err;
  RunResult cmb = run("combine-auc --scores " + path("pa.scores").string() + " --labels " +
                      path("split.pairs").string());
  ASSERT_EQ(cmb.exit_code, 0) << cmb.err;

  // Same numbers straight through the library.
  linkpred::TemporalEdgeList edges =
      linkpred::io::read_edge_file(path("g.edges").string());
  linkpred::QueryPairSet pairs =
      linkpred::io::read_pairs_file(path("split.pairs").string());
  linkpred::SparseAdjacency adj = linkpred::SparseAdjacency::build(edges);
  const double expected =
      linkpred::auc(linkpred::score_pa(adj.degrees(), pairs).values, pairs.labels);
  char line[64];
  std::snprintf(line, sizeof(line), "auc %.5f", expected);
  EXPECT_NE(cmb.out.find(line), std::string::npos) << cmb.out;
}

TEST_F(CliTest, TrainSnapshotReproducesGoldenPipeline) {
  // File-level rerun of the golden benchmark: snapshot scoring must land on
  // the frozen AUC, with the node universe inferred from the pairs file.
  RunResult gen = run("generate --n 2000 --m 3 --b 0 --seed 42 --out " +
                      path("full.edges").string() +
                      " --t1 300 --t2 500 --n-pairs 10000 --pos-cap 0.05 --pairs-out " +
                      path("split.pairs").string() + " --train-out " +
                      path("train.edges").string());
  ASSERT_EQ(gen.exit_code, 0) << gen.err;
  EXPECT_NE(gen.out.find("split_positives 500"), std::string::npos);

  RunResult sc = run("score --edges " + path("train.edges").string() + " --pairs " +
                     path("split.pairs").string() + " --method pa --out " +
                     path("pa.scores").string());
  ASSERT_EQ(sc.exit_code, 0) << sc.err;
  RunResult cmb = run("combine-auc --scores " + path("pa.scores").string() + " --labels " +
                      path("split.pairs").string());
  ASSERT_EQ(cmb.exit_code, 0) << cmb.err;
  EXPECT_NE(cmb.out.find("auc 0.83026"), std::string::npos) << cmb.out;

  // Categories audited against the snapshot: late-arriving nodes count as
  // degree zero, so all three buckets are populated.
  RunResult ins = run("inspect --edges " + path("train.edges").string() + " --pairs " +
                      path("split.pairs").string());
  ASSERT_EQ(ins.exit_code, 0) << ins.err;
  EXPECT_NE(ins.out.find("nodes 2000"), std::string::npos) << ins.out;
  EXPECT_NE(ins.out.find("(k=0,k=0): 6855"), std::string::npos);
  EXPECT_NE(ins.out.find("(k=0,k>0): 2912"), std::string::npos);
  EXPECT_NE(ins.out.find("(k>0,k>0): 233"), std::string::npos);
}

TEST_F(CliTest, InspectReportsCategoriesAndGamma) {
  spit(path("path.edges"), "0 1 10\n1 2 20\n");
  spit(path("q.pairs"), "0 2\n");
  RunResult r = run("inspect --edges " + path("path.edges").string() + " --pairs " +
                    path("q.pairs").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("nodes 3"), std::string::npos);
  EXPECT_NE(r.out.find("edges 2"), std::string::npos);
  EXPECT_NE(r.out.find("(k>0,k>0): 1"), std::string::npos);
  EXPECT_NE(r.out.find("(k=0,k=0): 0"), std::string::npos);
  // Three nodes cannot support a three-bin tail fit.
  EXPECT_NE(r.out.find("gamma unavailable"), std::string::npos);
}

TEST_F(CliTest, InspectWritesHistogramFile) {
  RunResult gen = run("generate --n 2000 --m 3 --seed 42 --out " + path("g.edges").string());
  ASSERT_EQ(gen.exit_code, 0) << gen.err;
  RunResult r = run("inspect --edges " + path("g.edges").string() + " --hist-out " +
                    path("hist.txt").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("gamma "), std::string::npos);
  const std::string hist = slurp(path("hist.txt"));
  EXPECT_NE(hist.find("# gamma="), std::string::npos);
  EXPECT_NE(hist.find("kmin="), std::string::npos);
  EXPECT_NE(hist.find("r2="), std::string::npos);
}

TEST_F(CliTest, OptimizeEpsilonWritesTrace) {
  RunResult gen = run("generate --n 300 --m 2 --seed 13 --out " + path("g.edges").string() +
                      " --t1 150 --t2 297 --n-pairs 120 --pos-cap 0.3 --pairs-out " +
                      path("split.pairs").string());
  ASSERT_EQ(gen.exit_code, 0) << gen.err;
  RunResult r = run("optimize --mode epsilon --edges " + path("g.edges").string() +
                    " --pairs " + path("split.pairs").string() +
                    " --grid-step 0.25 --trace-out " + path("trace.txt").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("best_eps "), std::string::npos);
  EXPECT_NE(r.out.find("evaluations 5"), std::string::npos);
  const std::string trace = slurp(path("trace.txt"));
  EXPECT_NE(trace.find("0.000000 "), std::string::npos);
  EXPECT_NE(trace.find("1.000000 "), std::string::npos);
}

TEST_F(CliTest, OptimizeAcceptsSeparateLabelsFile) {
  spit(path("g.edges"), "0 1 1\n1 2 2\n2 3 3\n0 3 4\n");
  spit(path("q.pairs"), "0 2\n1 3\n");
  spit(path("l.pairs"), "0 2 1\n1 3 0\n");
  RunResult r = run("optimize --mode epsilon --edges " + path("g.edges").string() +
                    " --pairs " + path("q.pairs").string() + " --labels " +
                    path("l.pairs").string() + " --grid-step 0.5");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("best_eps "), std::string::npos);

  spit(path("bad.pairs"), "0 2 1\n1 9 0\n");
  RunResult mismatch = run("optimize --mode epsilon --edges " + path("g.edges").string() +
                           " --pairs " + path("q.pairs").string() + " --labels " +
                           path("bad.pairs").string() + " --grid-step 0.5");
  EXPECT_NE(mismatch.exit_code, 0);
}

TEST_F(CliTest, OptimizeThetaSinglePointEchoesIt) {
  RunResult gen = run("generate --n 200 --m 2 --seed 17 --out " + path("g.edges").string() +
                      " --t1 100 --t2 197 --n-pairs 80 --pos-cap 0.3 --pairs-out " +
                      path("split.pairs").string());
  ASSERT_EQ(gen.exit_code, 0) << gen.err;
  RunResult r = run("optimize --mode theta --edges " + path("g.edges").string() +
                    " --pairs " + path("split.pairs").string() +
                    " --grid-t0 0.0 --grid-t1 0.45 --grid-t2 3 --grid-t3 6 --trace-out " +
                    path("trace.txt").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("best_theta 0.000000,0.450000,3.000000,6"), std::string::npos);
  const std::string trace = slurp(path("trace.txt"));
  EXPECT_NE(trace.find("0.000000 0.450000 3.000000 6 "), std::string::npos);
}

TEST_F(CliTest, ConfigFileSuppliesDefaultsAndFlagsOverride) {
  spit(path("run.cfg"),
       "# benchmark generation settings\n"
       "n = 150\n"
       "m = 2\n"
       "seed = 5\n"
       "out = " + path("from_config.edges").string() + "\n");
  RunResult r = run("generate --config " + path("run.cfg").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("from_config.edges")));
  EXPECT_NE(r.out.find("edges 297"), std::string::npos);  // 3 + 2*147

  RunResult overridden = run("generate --config " + path("run.cfg").string() +
                             " --n 200 --out " + path("cli_wins.edges").string());
  ASSERT_EQ(overridden.exit_code, 0) << overridden.err;
  EXPECT_TRUE(fs::exists(path("cli_wins.edges")));
  EXPECT_NE(overridden.out.find("edges 397"), std::string::npos);  // 3 + 2*197
}

TEST_F(CliTest, EffectiveConfigEchoReconstructsTheRun) {
  RunResult r = run("generate --n 120 --m 2 --seed 9 --out " + path("g.edges").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("# effective config [generate]"), std::string::npos);
  EXPECT_NE(r.out.find("n=120"), std::string::npos);
  EXPECT_NE(r.out.find("seed=9"), std::string::npos);

  // The echoed block is itself a valid config file for the same run.
  const std::size_t at = r.out.find("n=120");
  const std::size_t end = r.out.find("nodes ");
  spit(path("echo.cfg"), r.out.substr(at, end - at));
  const std::string bytes = slurp(path("g.edges"));
  RunResult replay = run("generate --config " + path("echo.cfg").string());
  ASSERT_EQ(replay.exit_code, 0) << replay.err;
  EXPECT_EQ(slurp(path("g.edges")), bytes);
}

TEST_F(CliTest, MissingSubcommandFails) {
  RunResult r = run("");
  EXPECT_NE(r.exit_code, 0);
}
