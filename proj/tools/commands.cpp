#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "phaserqa/csv.hpp"
#include "phaserqa/embedding.hpp"
#include "phaserqa/error.hpp"
#include "phaserqa/pipeline.hpp"
#include "phaserqa/preprocess.hpp"
#include "phaserqa/projection.hpp"
#include "phaserqa/rqa.hpp"
#include "phaserqa/signals.hpp"

namespace phaserqa::cli {
namespace {

using csv::format_double;

// "-" writes to stdout.
void with_output(const std::string& path, bool binary,
                 const std::function<void(std::ostream&)>& write) {
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  write(out);
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

std::string metric_fields(const rqa::RqaMetrics& m) {
  return format_double(m.rec) + ',' + format_double(m.det) + ',' +
         (m.ratio_defined ? format_double(m.ratio) : std::string()) + ',' + format_double(m.ent);
}

}  // namespace

std::vector<std::size_t> parse_int_range(const std::string& text) {
  const auto parts = csv::split(text, ':');
  auto as_count = [&](const std::string& s) {
    const auto v = csv::parse_integer(s);
    if (v < 1) throw Error(ErrorCode::kInvalidArgument, "range values must be >= 1: " + text);
    return static_cast<std::size_t>(v);
  };
  try {
    if (parts.size() == 1) return {as_count(parts[0])};
    if (parts.size() == 2) return rqa::integer_range(as_count(parts[0]), as_count(parts[1]));
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidArgument, "bad integer range '" + text + "': " + e.what());
  }
  throw Error(ErrorCode::kInvalidArgument, "bad integer range '" + text + "', expected a:b");
}

std::vector<double> parse_real_range(const std::string& text) {
  const auto parts = csv::split(text, ':');
  try {
    if (parts.size() == 1) return {csv::parse_double(parts[0])};
    if (parts.size() == 3) {
      return rqa::linear_range(csv::parse_double(parts[0]), csv::parse_double(parts[1]),
                               csv::parse_double(parts[2]));
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidArgument, "bad real range '" + text + "': " + e.what());
  }
  throw Error(ErrorCode::kInvalidArgument,
              "bad real range '" + text + "', expected start:stop:step");
}

int run_generate(const GenerateOptions& o) {
  if (o.system == "lorenz") {
    signals::LorenzParams params;
    params.dt = o.dt;
    params.transient_steps = o.transient;
    const auto states = signals::gen_lorenz(params, o.n);
    with_output(o.out, false, [&](std::ostream& out) {
      if (!o.states) return csv::write_series(out, states.x);
      out << "index,x,y,z\n";
      for (std::size_t i = 0; i < states.x.size(); ++i) {
        out << i << ',' << format_double(states.x[i]) << ',' << format_double(states.y[i]) << ','
            << format_double(states.z[i]) << '\n';
      }
    });
    return kExitOk;
  }
  if (o.states) {
    throw Error(ErrorCode::kInvalidArgument, "--states only applies to the lorenz system");
  }
  const TimeSeries series = [&] {
    if (o.system == "noise") return signals::gen_gaussian_noise(o.seed, o.n);
    if (o.system == "harmonic") return signals::gen_harmonic(o.n);
    if (o.system == "logistic") return signals::gen_logistic_drift(o.x0, o.n);
    if (o.system == "brownian") return signals::gen_brownian(o.seed, o.n);
    throw Error(ErrorCode::kInvalidArgument, "unknown system '" + o.system + "'");
  }();
  with_output(o.out, false, [&](std::ostream& out) { csv::write_series(out, series); });
  return kExitOk;
}

int run_preprocess(const PreprocessOptions& o) {
  const auto level = preprocess::parse_smoothness(o.smooth);
  const auto raw = csv::load_series(o.in, o.column);
  preprocess::WindowSpec window{o.window_length, o.window_offset};
  if (window.length_samples == 0) {
    if (window.offset_samples >= raw.size()) {
      throw Error(ErrorCode::kOutOfBounds, "window offset beyond series length");
    }
    window.length_samples = raw.size() - window.offset_samples;
  }
  const auto result = preprocess::apply_smoothness(preprocess::window_slice(raw, window), level);
  with_output(o.out, false, [&](std::ostream& out) { csv::write_series(out, result); });
  return kExitOk;
}

int run_embed_params(const EmbedParamsOptions& o) {
  const auto x = csv::load_series(o.in, o.column);
  const auto ami = embedding::ami_curve(x, o.tau_max, o.bins);
  const auto tau0 = embedding::first_local_minimum(ami);

  std::vector<embedding::CaoCurves> cao;
  for (const auto tau : parse_int_range(o.cao_tau)) {
    try {
      cao.push_back(embedding::cao_curves(x, tau, o.m_max));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInsufficientLength) throw;
      std::cerr << "warning: skipping Cao statistics for tau=" << tau << ": " << e.what() << '\n';
    }
  }

  std::string m0_text;
  int status = kExitOk;
  try {
    const auto at_tau0 = embedding::cao_curves(x, tau0.tau, o.m_max);
    m0_text = std::to_string(embedding::select_min_dimension(at_tau0, o.plateau));
  } catch (const Error& e) {
    std::cerr << "error: minimum dimension at tau=" << tau0.tau << ": " << e.what() << '\n';
    status = kExitFailed;
  }
  if (tau0.monotone) {
    std::cerr << "warning: AMI has no interior minimum up to tau_max=" << o.tau_max << '\n';
  }

  with_output(o.out, false, [&](std::ostream& out) {
    out << "section,tau,m,e1,e2,ami_bits\n";
    for (const auto& c : cao) {
      for (std::size_t m = 0; m < c.e1.size(); ++m) {
        out << "cao," << c.tau_used << ',' << m + 1 << ',' << format_double(c.e1[m]) << ','
            << format_double(c.e2[m]) << ",\n";
      }
    }
    for (std::size_t tau = 0; tau < ami.values_bits.size(); ++tau) {
      out << "ami," << tau << ",,,," << format_double(ami.values_bits[tau]) << '\n';
    }
    out << "summary," << tau0.tau << ',' << m0_text << ",,,\n";
  });
  return status;
}

int run_rqa(const RqaOptions& o) {
  const auto norm = rqa::parse_norm(o.norm);
  const embedding::EmbeddingParams params{o.m, o.tau};
  params.validate();
  std::ostringstream body;
  int status = kExitOk;
  for (const auto& path : o.in) {
    body << path << ',' << o.m << ',' << o.tau << ',' << format_double(o.eps) << ',';
    try {
      const auto x = csv::load_series(path, o.column);
      body << metric_fields(rqa::rqa_all(x, params, o.eps, norm, o.dmin)) << ",\n";
    } catch (const Error& e) {
      std::string msg = e.what();
      std::replace(msg.begin(), msg.end(), ',', ';');
      body << ",,,," << msg << '\n';
      std::cerr << "error: " << path << ": " << e.what() << '\n';
      status = kExitFailed;
    }
  }
  with_output(o.out, false, [&](std::ostream& out) {
    out << "file,m,tau,eps,REC,DET,RATIO,ENT,error\n" << body.str();
  });
  return status;
}

int run_sweep(const SweepOptions& o) {
  const auto x = csv::load_series(o.in, o.column);
  const auto ms = parse_int_range(o.m);
  const auto taus = parse_int_range(o.tau);
  const auto eps = parse_real_range(o.eps);
  rqa::SweepOptions opts;
  opts.norm = rqa::parse_norm(o.norm);
  opts.d_min = o.dmin;
  opts.threads = o.threads;
  const auto grid = rqa::sweep(x, ms, taus, eps, opts);
  with_output(o.out, false, [&](std::ostream& out) {
    out << "m,tau,eps,REC,DET,RATIO,ENT\n";
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
      for (std::size_t ti = 0; ti < taus.size(); ++ti) {
        for (std::size_t ei = 0; ei < eps.size(); ++ei) {
          out << ms[mi] << ',' << taus[ti] << ',' << format_double(eps[ei]) << ',';
          const auto& cell = grid.at(mi, ti, ei);
          out << (cell ? metric_fields(*cell) : std::string(",,,")) << '\n';
        }
      }
    }
  });
  return kExitOk;
}

int run_rp_export(const RpExportOptions& o) {
  const auto norm = rqa::parse_norm(o.norm);
  const auto r = [&] {
    if (!o.columns.empty()) {
      std::vector<TimeSeries> cols;
      for (const auto& name : o.columns) cols.push_back(csv::load_series(o.in, name));
      return rqa::recurrence_matrix(StateMatrix::from_columns(cols), o.eps, norm);
    }
    const auto x = csv::load_series(o.in, o.column);
    return rqa::recurrence_matrix(embedding::utde_embed(x, {o.m, o.tau}), o.eps, norm);
  }();
  with_output(o.out, true, [&](std::ostream& out) { rqa::write_pgm(r, out); });
  return kExitOk;
}

int run_rss(const RssOptions& o) {
  const auto x = csv::load_series(o.in, o.column);
  const auto traj = projection::pca_project(embedding::utde_embed(x, {o.m, o.tau}), 3);
  if (traj.rank_deficient) {
    std::cerr << "warning: embedding has fewer than 3 directions with nonzero variance\n";
  }
  with_output(o.out, false, [&](std::ostream& out) {
    out << "# explained_variance: " << format_double(traj.explained_variance[0]) << ','
        << format_double(traj.explained_variance[1]) << ','
        << format_double(traj.explained_variance[2]) << '\n';
    out << "index,c1,c2,c3\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
      out << i << ',' << format_double(traj(i, 0)) << ',' << format_double(traj(i, 1)) << ','
          << format_double(traj(i, 2)) << '\n';
    }
  });
  return kExitOk;
}

int run_batch(const BatchOptions& o) {
  auto config = o.config.empty() ? pipeline::AnalysisConfig{} : pipeline::read_config(o.config);
  if (o.threads != 0) config.threads = o.threads;
  const auto manifest = pipeline::read_manifest(o.manifest);
  const auto result = pipeline::run_batch(manifest, config);
  with_output(o.out, false,
              [&](std::ostream& out) { pipeline::write_batch_csv(out, result, config); });
  for (const auto& row : result.rows) {
    if (!row.error.empty()) std::cerr << "error: " << row.entry.path << ": " << row.error << '\n';
  }
  return result.failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace phaserqa::cli
