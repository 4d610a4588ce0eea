#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "phaserqa/error.hpp"

using namespace phaserqa;

int main(int argc, char** argv) {
  CLI::App app{"Phase-space reconstruction and recurrence quantification analysis"};
  app.require_subcommand(1);

  const std::vector<std::string> norms{"euclidean", "manhattan", "maximum"};
  const std::vector<std::string> levels{"sg0", "sg1", "sg2"};

  cli::GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a reference signal as index,value CSV");
  generate->add_option("--system", gen.system, "Signal family")
      ->required()
      ->check(CLI::IsMember({"lorenz", "noise", "harmonic", "logistic", "brownian"}));
  generate->add_option("--n", gen.n, "Number of samples")->required();
  generate->add_option("--seed", gen.seed, "Seed for noise and brownian");
  generate->add_option("--x0", gen.x0, "Logistic map initial value in (0, 1)");
  generate->add_option("--dt", gen.dt, "Lorenz RK4 step");
  generate->add_option("--transient", gen.transient, "Lorenz steps discarded before sampling");
  generate->add_flag("--states", gen.states, "Lorenz only: write x,y,z columns");
  generate->add_option("--out", gen.out, "Output CSV ('-' for stdout)")->required();

  cli::PreprocessOptions pre;
  auto* preprocess = app.add_subcommand("preprocess", "Window, normalise and smooth one column");
  preprocess->add_option("--in", pre.in)->required();
  preprocess->add_option("--column", pre.column);
  preprocess->add_option("--smooth", pre.smooth)->check(CLI::IsMember(levels));
  preprocess->add_option("--window-offset", pre.window_offset);
  preprocess->add_option("--window-length", pre.window_length, "0 keeps the rest of the series");
  preprocess->add_option("--out", pre.out)->required();

  cli::EmbedParamsOptions emb;
  auto* embed = app.add_subcommand("embed-params", "Cao E1/E2 and AMI curves with (m0, tau0)");
  embed->add_option("--in", emb.in)->required();
  embed->add_option("--column", emb.column);
  embed->add_option("--m-max", emb.m_max);
  embed->add_option("--tau-max", emb.tau_max, "Largest AMI delay");
  embed->add_option("--bins", emb.bins, "AMI histogram bins");
  embed->add_option("--plateau", emb.plateau, "E1 plateau band around 1");
  embed->add_option("--cao-tau", emb.cao_tau, "Delays for the Cao diagnostic curves (a:b)");
  embed->add_option("--out", emb.out)->required();

  cli::RqaOptions rq;
  auto* rqa_cmd = app.add_subcommand("rqa", "REC, DET, RATIO and ENT for one or more files");
  rqa_cmd->add_option("--in", rq.in)->required();
  rqa_cmd->add_option("--column", rq.column);
  rqa_cmd->add_option("--m", rq.m);
  rqa_cmd->add_option("--tau", rq.tau);
  rqa_cmd->add_option("--eps", rq.eps);
  rqa_cmd->add_option("--norm", rq.norm)->check(CLI::IsMember(norms));
  rqa_cmd->add_option("--dmin", rq.dmin);
  rqa_cmd->add_option("--out", rq.out)->required();

  cli::SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "RQA metrics over an (m, tau, eps) grid");
  sweep->add_option("--in", sw.in)->required();
  sweep->add_option("--column", sw.column);
  sweep->add_option("--m", sw.m, "a:b");
  sweep->add_option("--tau", sw.tau, "a:b");
  sweep->add_option("--eps", sw.eps, "start:stop:step");
  sweep->add_option("--norm", sw.norm)->check(CLI::IsMember(norms));
  sweep->add_option("--dmin", sw.dmin);
  sweep->add_option("--threads", sw.threads, "0 uses every core");
  sweep->add_option("--out", sw.out)->required();

  cli::RpExportOptions rp;
  auto* rp_export = app.add_subcommand("rp-export", "Recurrence plot as a binary PGM image");
  rp_export->add_option("--in", rp.in)->required();
  rp_export->add_option("--column", rp.column);
  rp_export->add_option("--columns", rp.columns, "Use these columns as states, no embedding")
      ->delimiter(',');
  rp_export->add_option("--m", rp.m);
  rp_export->add_option("--tau", rp.tau);
  rp_export->add_option("--eps", rp.eps);
  rp_export->add_option("--norm", rp.norm)->check(CLI::IsMember(norms));
  rp_export->add_option("--out", rp.out)->required();

  cli::RssOptions rs;
  auto* rss = app.add_subcommand("rss", "Three leading principal components of the embedding");
  rss->add_option("--in", rs.in)->required();
  rss->add_option("--column", rs.column);
  rss->add_option("--m", rs.m);
  rss->add_option("--tau", rs.tau);
  rss->add_option("--out", rs.out)->required();

  cli::BatchOptions bt;
  auto* batch = app.add_subcommand("batch", "Run a manifest of IMU recordings");
  batch->add_option("--manifest", bt.manifest)->required();
  batch->add_option("--config", bt.config, "key=value analysis configuration");
  batch->add_option("--threads", bt.threads);
  batch->add_option("--out", bt.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*generate) return cli::run_generate(gen);
    if (*preprocess) return cli::run_preprocess(pre);
    if (*embed) return cli::run_embed_params(emb);
    if (*rqa_cmd) return cli::run_rqa(rq);
    if (*sweep) return cli::run_sweep(sw);
    if (*rp_export) return cli::run_rp_export(rp);
    if (*rss) return cli::run_rss(rs);
    if (*batch) return cli::run_batch(bt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kInvalidArgument ? cli::kExitUsage : cli::kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitFailed;
  }
  return cli::kExitUsage;
}
