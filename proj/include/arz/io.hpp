#pragma once

#include <filesystem>
#include <string>

#include "arz/driver.hpp"
#include "arz/grid.hpp"
#include "arz/pressure.hpp"

namespace arz {

/// Columns x,rho,v,y over interior cells; v is "nan" in vacuum cells.
void write_csv(const std::filesystem::path& path, const SolutionField& field,
               const PressureLawd& law);

/// Reads a file produced by write_csv. Ghosts copy their interior neighbor.
SolutionField read_csv(const std::filesystem::path& path, double time = 0);

/// Columns step,t,dt.
void write_log(const std::filesystem::path& path, const RunLog& log);

/// key=value lines describing the run.
void write_summary(const std::filesystem::path& path, const RunConfig& cfg,
                   const RunResult& result);

/// Reads min_dt back from a summary written by write_summary.
double read_summary_min_dt(const std::filesystem::path& path);

/// Python script plotting every snapshot CSV in the directory.
void emit_plot_script(const std::filesystem::path& path);

/// Writes snapshot_<t>.csv files, log.csv, summary.txt and plot.py into dir.
void write_run(const std::filesystem::path& dir, const RunConfig& cfg, const RunResult& result);

/// snapshot_0.2.csv style name.
std::string snapshot_name(double t);

}  // namespace arz
