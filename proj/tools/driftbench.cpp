// driftbench: concept-drift detection experiment runner.
//
// Subcommands:
//   run      one experiment campaign (dataset x detector), CSV artifacts
//   table    the full grid behind one of the three result tables
//   density  beta density series with confidence boundaries
//   gen      dump a generated stream + change-point sidecar

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "drift/beta_math.hpp"
#include "drift/metrics.hpp"
#include "drift/prequential.hpp"
#include "drift/streams.hpp"

namespace fs = std::filesystem;

namespace {

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

enum class DatasetKind { bitstream, sea, hyperplane, elec2 };

enum class BitFeed { classifier, direct };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::bitstream;
  // bitstream
  std::size_t segment = 600;
  int changes = 30;
  double mag_lo = 0.5;
  double mag_hi = 0.7;
  BitFeed bit_feed = BitFeed::classifier;
  // sea
  double noise = 0.0;
  // hyperplane
  double angle = 20.0;
  // elec2
  fs::path elec2_path;

  std::string describe() const {
    switch (kind) {
      case DatasetKind::bitstream: {
        std::ostringstream os;
        os << "bitstream segment=" << segment << " magnitude=[" << fmt6(mag_lo) << ","
           << fmt6(mag_hi) << "]";
        return os.str();
      }
      case DatasetKind::sea:
        return "sea noise=" + fmt6(noise);
      case DatasetKind::hyperplane:
        return "hyperplane angle=" + fmt6(angle);
      case DatasetKind::elec2:
        return "elec2 path=" + elec2_path.string();
    }
    return "?";
  }
};

struct CampaignConfig {
  DatasetSpec dataset;
  drift::PrequentialConfig preq;
  int runs = 50;
  std::uint64_t base_seed = 1;
  int jobs = 1;
};

struct CampaignResult {
  std::vector<drift::RunTrace> traces;
  std::vector<drift::DetectionOutcome> outcomes;
  drift::MetricSummary summary;
};

struct RunArtifacts {
  drift::RunTrace trace;
  drift::DetectionOutcome outcome;
};

RunArtifacts run_one(const CampaignConfig& cfg, std::uint64_t seed) {
  drift::PrequentialConfig pc = cfg.preq;
  pc.seed = seed;
  RunArtifacts out;
  drift::ChangePointLog changes;
  std::size_t stream_len = 0;
  switch (cfg.dataset.kind) {
    case DatasetKind::bitstream: {
      drift::BitStreamConfig bc;
      bc.segment_length = cfg.dataset.segment;
      bc.n_changes = cfg.dataset.changes;
      bc.mag_lo = cfg.dataset.mag_lo;
      bc.mag_hi = cfg.dataset.mag_hi;
      bc.seed = seed;
      const auto bs = drift::gen_bitstream(bc);
      changes = bs.changes;
      stream_len = bs.bits.size();
      if (cfg.dataset.bit_feed == BitFeed::direct) {
        out.trace = drift::run_error_stream(bs.bits, pc);
      } else {
        out.trace = drift::run_prequential(drift::bits_as_labels(bs.bits), pc);
      }
      break;
    }
    case DatasetKind::sea: {
      const auto g = drift::gen_sea(cfg.dataset.noise, seed);
      changes = g.changes;
      stream_len = g.stream.size();
      out.trace = drift::run_prequential(g.stream, pc);
      break;
    }
    case DatasetKind::hyperplane: {
      const auto g = drift::gen_hyperplane(cfg.dataset.angle, seed);
      changes = g.changes;
      stream_len = g.stream.size();
      out.trace = drift::run_prequential(g.stream, pc);
      break;
    }
    case DatasetKind::elec2: {
      const auto s = drift::load_elec2(cfg.dataset.elec2_path);
      stream_len = s.size();
      out.trace = drift::run_prequential(s, pc);
      break;
    }
  }
  out.outcome =
      drift::match_detections(out.trace.drift_batches, changes, pc.batch_size, stream_len);
  return out;
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
  CampaignResult res;
  res.traces.resize(cfg.runs);
  res.outcomes.resize(cfg.runs);

  const int jobs = std::max(1, std::min<int>(cfg.jobs, cfg.runs));
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load()) {
      const int r = next.fetch_add(1);
      if (r >= cfg.runs) return;
      try {
        auto arts = run_one(cfg, cfg.base_seed + static_cast<std::uint64_t>(r));
        res.traces[r] = std::move(arts.trace);
        res.outcomes[r] = std::move(arts.outcome);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        error_message = e.what();
        failed = true;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed) throw std::runtime_error(error_message);

  res.summary = drift::summarize(res.outcomes, res.traces);
  return res;
}

// Files created by a command; removed again if the command fails midway.
class OutputSet {
 public:
  std::ofstream create(const fs::path& p) {
    if (!p.parent_path().empty()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + p.string());
    paths_.push_back(p);
    return f;
  }
  void discard_all() {
    for (const auto& p : paths_) {
      std::error_code ec;
      fs::remove(p, ec);
    }
  }
  void commit() { paths_.clear(); }
  ~OutputSet() { discard_all(); }

 private:
  std::vector<fs::path> paths_;
};

const char* to_string(BitFeed f) {
  return f == BitFeed::classifier ? "classifier" : "direct";
}

const char* to_string(drift::BoundMode m) {
  return m == drift::BoundMode::central ? "central" : "upper_tail";
}

void write_config_echo(std::ostream& os, const CampaignConfig& cfg) {
  const auto& d = cfg.dataset;
  switch (d.kind) {
    case DatasetKind::bitstream:
      os << "dataset=bitstream\nsegment=" << d.segment << "\nchanges=" << d.changes
         << "\nmagnitude_lo=" << fmt6(d.mag_lo) << "\nmagnitude_hi=" << fmt6(d.mag_hi)
         << "\nbit_feed=" << to_string(d.bit_feed) << "\n";
      break;
    case DatasetKind::sea:
      os << "dataset=sea\nnoise=" << fmt6(d.noise) << "\n";
      break;
    case DatasetKind::hyperplane:
      os << "dataset=hyperplane\nangle=" << fmt6(d.angle) << "\n";
      break;
    case DatasetKind::elec2:
      os << "dataset=elec2\nelec2_path=" << d.elec2_path.string() << "\n";
      break;
  }
  os << "detector=" << drift::to_string(cfg.preq.detector) << "\n"
     << "batch_size=" << cfg.preq.batch_size << "\n"
     << "runs=" << cfg.runs << "\nbase_seed=" << cfg.base_seed << "\njobs=" << cfg.jobs
     << "\n";
  const auto& b = cfg.preq.bd3;
  os << "bd3.pi0=" << fmt6(b.pi0) << "\nbd3.warn_mass=" << fmt6(b.warn_mass)
     << "\nbd3.drift_mass=" << fmt6(b.drift_mass) << "\nbd3.decay_a=" << fmt6(b.decay_a)
     << "\nbd3.decay_b=" << fmt6(b.decay_b) << "\nbd3.bound_mode=" << to_string(b.bound_mode)
     << "\nbd3.fixed_decay=" << (b.fixed_decay ? fmt6(*b.fixed_decay) : "none") << "\n";
}

void emit_campaign(const fs::path& outdir, const CampaignConfig& cfg,
                   const CampaignResult& res) {
  OutputSet outputs;
  for (int r = 0; r < cfg.runs; ++r) {
    const auto seed = cfg.base_seed + static_cast<std::uint64_t>(r);
    auto f = outputs.create(outdir / ("trace_" + std::to_string(seed) + ".csv"));
    drift::write_trace_csv(f, res.traces[r]);
  }
  {
    auto f = outputs.create(outdir / "config.echo");
    write_config_echo(f, cfg);
  }
  {
    auto f = outputs.create(outdir / "summary.csv");
    drift::write_summary_csv(f, res.summary);
  }
  outputs.commit();
}

// ---------------------------------------------------------------------------
// table rendering

struct TableCell {
  double mean = 0.0;
  double std = 0.0;
};

void print_aligned(std::ostream& os, const std::vector<std::string>& row_names,
                   const std::vector<std::string>& col_names,
                   const std::vector<std::vector<TableCell>>& cells) {
  const std::size_t w = 24;
  os << std::string(18, ' ');
  for (const auto& c : col_names) {
    os << std::string(c.size() < w ? w - c.size() : 1, ' ') << c;
  }
  os << "\n";
  for (std::size_t r = 0; r < row_names.size(); ++r) {
    std::string name = row_names[r];
    name.resize(18, ' ');
    os << name;
    for (const auto& cell : cells[r]) {
      const std::string v = fmt6(cell.mean) + " (+-" + fmt6(cell.std) + ")";
      os << std::string(v.size() < w ? w - v.size() : 1, ' ') << v;
    }
    os << "\n";
  }
}

void write_table_csv(std::ostream& os, const std::string& corner,
                     const std::vector<std::string>& row_names,
                     const std::vector<std::string>& col_names,
                     const std::vector<std::vector<TableCell>>& cells) {
  os << corner;
  for (const auto& c : col_names) os << ',' << c << ',' << c << "_std";
  os << "\n";
  for (std::size_t r = 0; r < row_names.size(); ++r) {
    os << row_names[r];
    for (const auto& cell : cells[r]) os << ',' << fmt6(cell.mean) << ',' << fmt6(cell.std);
    os << "\n";
  }
}

// ---------------------------------------------------------------------------

fs::path resolve_elec2(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ELEC2_PATH"); env && *env) return env;
  return "data/elec2.csv";
}

struct CommonOpts {
  int runs = 50;
  std::size_t batch_size = 200;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out_dir = "out";
  // bd3
  double pi0 = 0.5;
  double warn_mass = 0.950;
  double drift_mass = 0.997;
  double decay_a = 0.15;
  double decay_b = -7.0;
  std::string bound_mode = "central";
  double decay_fixed = 0.0;  // 0 = scheduled
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--runs", o.runs, "independent runs per configuration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--batch-size", o.batch_size, "instances per batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "base seed; run r uses seed+r")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "parallel runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", o.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--pi0", o.pi0, "bd3 prior error rate")->capture_default_str();
  cmd->add_option("--warn-mass", o.warn_mass, "bd3 warning confidence mass")
      ->capture_default_str();
  cmd->add_option("--drift-mass", o.drift_mass, "bd3 drift confidence mass")
      ->capture_default_str();
  cmd->add_option("--decay-a", o.decay_a, "bd3 decay schedule a")->capture_default_str();
  cmd->add_option("--decay-b", o.decay_b, "bd3 decay schedule b")->capture_default_str();
  cmd->add_option("--bound-mode", o.bound_mode, "bd3 bound mode")
      ->check(CLI::IsMember({"central", "upper_tail"}))
      ->capture_default_str();
  cmd->add_option("--decay-fixed", o.decay_fixed,
                  "pin bd3 decay to a constant (0 = scheduled)")
      ->capture_default_str();
}

drift::Bd3Config bd3_from(const CommonOpts& o) {
  drift::Bd3Config b;
  b.pi0 = o.pi0;
  b.warn_mass = o.warn_mass;
  b.drift_mass = o.drift_mass;
  b.decay_a = o.decay_a;
  b.decay_b = o.decay_b;
  b.bound_mode =
      o.bound_mode == "central" ? drift::BoundMode::central : drift::BoundMode::upper_tail;
  if (o.decay_fixed > 0.0) b.fixed_decay = o.decay_fixed;
  return b;
}

int cmd_run(const CommonOpts& common, const DatasetSpec& dataset,
            const std::string& detector_name) {
  CampaignConfig cfg;
  cfg.dataset = dataset;
  cfg.runs = common.runs;
  cfg.base_seed = common.seed;
  cfg.jobs = common.jobs;
  cfg.preq.batch_size = common.batch_size;
  cfg.preq.detector = *drift::parse_detector(detector_name);
  cfg.preq.bd3 = bd3_from(common);

  const auto res = run_campaign(cfg);
  emit_campaign(common.out_dir, cfg, res);

  const auto& s = res.summary;
  std::cout << dataset.describe() << "  detector=" << detector_name << "\n"
            << "  fpr   " << fmt6(s.fpr_mean) << " (+-" << fmt6(s.fpr_std) << ")\n"
            << "  fnr   " << fmt6(s.fnr_mean) << " (+-" << fmt6(s.fnr_std) << ")\n"
            << "  delay " << fmt6(s.delay_mean) << " (+-" << fmt6(s.delay_std) << ")\n"
            << "  acc   " << fmt6(s.accuracy_mean) << " (+-" << fmt6(s.accuracy_std)
            << ")\n"
            << "artifacts in " << common.out_dir << "\n";
  return 0;
}

int cmd_table(int which, const CommonOpts& common, const std::string& elec2_flag,
              BitFeed bit_feed) {
  const fs::path outdir = common.out_dir;
  const std::vector<std::string> detectors =
      which == 1 ? std::vector<std::string>{"ddm", "eddm", "bd3"}
                 : std::vector<std::string>{"none", "ddm", "eddm", "bd3"};

  auto campaign_for = [&](const DatasetSpec& ds, const std::string& det) {
    CampaignConfig cfg;
    cfg.dataset = ds;
    cfg.runs = common.runs;
    cfg.base_seed = common.seed;
    cfg.jobs = common.jobs;
    cfg.preq.batch_size = common.batch_size;
    cfg.preq.detector = *drift::parse_detector(det);
    cfg.preq.bd3 = bd3_from(common);
    return run_campaign(cfg);
  };

  std::vector<std::string> col_names;
  std::vector<std::string> row_names;
  std::vector<std::vector<TableCell>> cells;
  std::string corner;

  if (which == 1) {
    corner = "detector_metric";
    std::vector<DatasetSpec> configs;
    for (const std::size_t seg : {std::size_t{600}, std::size_t{1000}}) {
      for (const auto [lo, hi] :
           {std::pair{0.1, 0.3}, std::pair{0.3, 0.5}, std::pair{0.5, 0.7}}) {
        DatasetSpec ds;
        ds.kind = DatasetKind::bitstream;
        ds.segment = seg;
        ds.mag_lo = lo;
        ds.mag_hi = hi;
        ds.bit_feed = bit_feed;
        configs.push_back(ds);
        std::ostringstream c;
        c << seg << "bits_" << fmt6(lo) << "-" << fmt6(hi);
        col_names.push_back(c.str());
      }
    }
    for (const auto& det : detectors) {
      std::vector<TableCell> fpr_row, fnr_row, delay_row;
      for (const auto& ds : configs) {
        const auto res = campaign_for(ds, det);
        fpr_row.push_back({res.summary.fpr_mean, res.summary.fpr_std});
        fnr_row.push_back({res.summary.fnr_mean, res.summary.fnr_std});
        delay_row.push_back({res.summary.delay_mean, res.summary.delay_std});
      }
      row_names.push_back(det + "_FPR");
      cells.push_back(fpr_row);
      row_names.push_back(det + "_FNR");
      cells.push_back(fnr_row);
      row_names.push_back(det + "_Delay");
      cells.push_back(delay_row);
    }
  } else if (which == 2) {
    corner = "detector";
    std::vector<DatasetSpec> configs;
    for (const double noise : {0.0, 0.1, 0.2}) {
      DatasetSpec ds;
      ds.kind = DatasetKind::sea;
      ds.noise = noise;
      configs.push_back(ds);
      col_names.push_back("sea_" + fmt6(noise));
    }
    for (const double angle : {20.0, 30.0, 40.0}) {
      DatasetSpec ds;
      ds.kind = DatasetKind::hyperplane;
      ds.angle = angle;
      configs.push_back(ds);
      col_names.push_back("hyperplane_" + fmt6(angle));
    }
    for (const auto& det : detectors) {
      std::vector<TableCell> row;
      for (const auto& ds : configs) {
        const auto res = campaign_for(ds, det);
        row.push_back({res.summary.accuracy_mean, res.summary.accuracy_std});
      }
      row_names.push_back(det);
      cells.push_back(row);
    }
  } else {
    corner = "detector";
    DatasetSpec ds;
    ds.kind = DatasetKind::elec2;
    ds.elec2_path = resolve_elec2(elec2_flag);
    if (!fs::exists(ds.elec2_path)) {
      std::cerr << "table 3 needs the Elec2 dataset; expected file: "
                << ds.elec2_path.string()
                << "\n(set --elec2-path or the ELEC2_PATH environment variable)\n";
      return 1;
    }
    col_names.push_back("elec2");
    for (const auto& det : detectors) {
      const auto res = campaign_for(ds, det);
      row_names.push_back(det);
      cells.push_back({{res.summary.accuracy_mean, res.summary.accuracy_std}});
    }
  }

  OutputSet outputs;
  {
    auto f = outputs.create(outdir / ("table" + std::to_string(which) + ".csv"));
    write_table_csv(f, corner, row_names, col_names, cells);
  }
  outputs.commit();
  print_aligned(std::cout, row_names, col_names, cells);
  std::cout << "artifacts in " << outdir.string() << "\n";
  return 0;
}

int cmd_density(double alpha, double beta, double mass, const std::string& out_file) {
  const drift::BetaParams p(alpha, beta);
  const auto [lo, hi] = drift::beta_central_interval(p, mass);

  std::ostringstream os;
  os << "# mass," << fmt6(mass) << "\n# lower," << fmt6(lo) << "\n# upper," << fmt6(hi)
     << "\nx,pdf\n";
  const int n = 1000;
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    os << fmt6(x) << ',' << fmt6(drift::beta_pdf(p, x)) << '\n';
  }
  if (out_file.empty()) {
    std::cout << os.str();
  } else {
    OutputSet outputs;
    auto f = outputs.create(out_file);
    f << os.str();
    outputs.commit();
    std::cout << "boundaries [" << fmt6(lo) << ", " << fmt6(hi) << "] written to "
              << out_file << "\n";
  }
  return 0;
}

int cmd_gen(const DatasetSpec& dataset, std::uint64_t seed, const std::string& prefix) {
  OutputSet outputs;
  drift::ChangePointLog changes;
  {
    auto f = outputs.create(prefix + ".csv");
    switch (dataset.kind) {
      case DatasetKind::bitstream: {
        drift::BitStreamConfig bc;
        bc.segment_length = dataset.segment;
        bc.n_changes = dataset.changes;
        bc.mag_lo = dataset.mag_lo;
        bc.mag_hi = dataset.mag_hi;
        bc.seed = seed;
        const auto bs = drift::gen_bitstream(bc);
        changes = bs.changes;
        drift::write_stream_csv(f, drift::bits_as_labels(bs.bits));
        break;
      }
      case DatasetKind::sea: {
        const auto g = drift::gen_sea(dataset.noise, seed);
        changes = g.changes;
        drift::write_stream_csv(f, g.stream);
        break;
      }
      case DatasetKind::hyperplane: {
        const auto g = drift::gen_hyperplane(dataset.angle, seed);
        changes = g.changes;
        drift::write_stream_csv(f, g.stream);
        break;
      }
      case DatasetKind::elec2: {
        const auto s = drift::load_elec2(dataset.elec2_path);
        drift::write_stream_csv(f, s);
        break;
      }
    }
  }
  {
    auto f = outputs.create(prefix + ".changes");
    drift::write_changepoints(f, changes);
  }
  outputs.commit();
  std::cout << "wrote " << prefix << ".csv and " << prefix << ".changes\n";
  return 0;
}

void add_dataset_options(CLI::App* cmd, DatasetSpec& ds, std::string& dataset_name,
                         std::string& elec2_flag, std::string& bit_feed_name) {
  cmd->add_option("--dataset", dataset_name, "dataset")
      ->required()
      ->check(CLI::IsMember({"bitstream", "sea", "hyperplane", "elec2"}));
  cmd->add_option("--segment", ds.segment, "bitstream: bits per stable concept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--changes", ds.changes, "bitstream: number of change points")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option(
         "--magnitude",
         [&ds](const std::vector<std::string>& vals) {
           ds.mag_lo = std::stod(vals.at(0));
           ds.mag_hi = std::stod(vals.at(1));
           return true;
         },
         "bitstream: mean-difference interval, two values")
      ->expected(2);
  cmd->add_option("--bit-feed", bit_feed_name,
                  "bitstream: classifier (labels through naive Bayes) or direct "
                  "(bits are the error stream)")
      ->check(CLI::IsMember({"classifier", "direct"}))
      ->capture_default_str();
  cmd->add_option("--noise", ds.noise, "sea: class noise fraction")->capture_default_str();
  cmd->add_option("--angle", ds.angle, "hyperplane: rotation step in degrees")
      ->capture_default_str();
  cmd->add_option("--elec2-path", elec2_flag,
                  "elec2: CSV path (default $ELEC2_PATH or data/elec2.csv)");
}

DatasetSpec finalize_dataset(const std::string& name, DatasetSpec ds,
                             const std::string& elec2_flag,
                             const std::string& bit_feed_name) {
  if (name == "bitstream") ds.kind = DatasetKind::bitstream;
  if (name == "sea") ds.kind = DatasetKind::sea;
  if (name == "hyperplane") ds.kind = DatasetKind::hyperplane;
  if (name == "elec2") {
    ds.kind = DatasetKind::elec2;
    ds.elec2_path = resolve_elec2(elec2_flag);
  }
  ds.bit_feed = bit_feed_name == "direct" ? BitFeed::direct : BitFeed::classifier;
  return ds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concept-drift detection benchmarks (BD3, DDM, EDDM)"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key=value config file with a [run]/[table] section; flags override");

  // run
  auto* run = app.add_subcommand("run", "run one experiment campaign");
  CommonOpts run_common;
  DatasetSpec run_ds;
  std::string run_dataset_name, run_detector, run_elec2, run_bit_feed = "classifier";
  add_dataset_options(run, run_ds, run_dataset_name, run_elec2, run_bit_feed);
  run->add_option("--detector", run_detector, "drift detector")
      ->required()
      ->check(CLI::IsMember({"none", "ddm", "eddm", "bd3"}));
  add_common(run, run_common);

  // table
  auto* table = app.add_subcommand("table", "reproduce one results table");
  int table_which = 1;
  CommonOpts table_common;
  std::string table_elec2, table_bit_feed = "classifier";
  table->add_option("which", table_which, "table number")
      ->required()
      ->check(CLI::Range(1, 3));
  table->add_option("--elec2-path", table_elec2, "elec2 CSV path (table 3)");
  table->add_option("--bit-feed", table_bit_feed, "bitstream feed mode (table 1)")
      ->check(CLI::IsMember({"classifier", "direct"}));
  add_common(table, table_common);

  // density
  auto* density = app.add_subcommand("density", "dump a beta density series");
  double d_alpha = 1.0, d_beta = 1.0, d_mass = 0.997;
  std::string d_out;
  density->add_option("--alpha", d_alpha, "shape parameter alpha")->required();
  density->add_option("--beta", d_beta, "shape parameter beta")->required();
  density->add_option("--mass", d_mass, "confidence mass for the boundaries")
      ->capture_default_str();
  density->add_option("--out", d_out, "output CSV (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "dump a generated stream");
  DatasetSpec gen_ds;
  std::string gen_dataset_name, gen_elec2, gen_bit_feed = "classifier";
  std::uint64_t gen_seed = 1;
  std::string gen_prefix = "stream";
  add_dataset_options(gen, gen_ds, gen_dataset_name, gen_elec2, gen_bit_feed);
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_prefix, "output path prefix")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_common,
                     finalize_dataset(run_dataset_name, run_ds, run_elec2, run_bit_feed),
                     run_detector);
    }
    if (table->parsed()) {
      const BitFeed feed =
          table_bit_feed == "direct" ? BitFeed::direct : BitFeed::classifier;
      return cmd_table(table_which, table_common, table_elec2, feed);
    }
    if (density->parsed()) return cmd_density(d_alpha, d_beta, d_mass, d_out);
    if (gen->parsed()) {
      return cmd_gen(finalize_dataset(gen_dataset_name, gen_ds, gen_elec2, gen_bit_feed),
                     gen_seed, gen_prefix);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
