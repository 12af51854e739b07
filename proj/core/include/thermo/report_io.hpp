#pragma once

#include <string>
#include <vector>

#include "thermo/pressure.hpp"
#include "thermo/spectra.hpp"
#include "thermo/transfer_op.hpp"

namespace thermo {

// Numbers are written with 17 significant digits, '.' decimal, no locale,
// so outputs round-trip exactly and identical configs diff byte-identically.
std::string format_g17(double x);

// Every file embeds the resolved run configuration: CSV as a leading
// "# config <json>" comment, JSON as a "config" field.

void write_pressure_curve_csv(const std::string& path, const PressureCurve& curve,
                              const TransitionReport* zones,
                              const std::string& config_json);
void write_summary_json(const std::string& path, const PressureCurve& curve,
                        const std::string& config_json);
void write_transitions_json(const std::string& path, const TransitionReport& report,
                            const std::string& config_json);
void write_gap_sweep_csv(const std::string& path, const std::vector<GapSweepRow>& rows,
                         const std::string& config_json);
void write_rate_csv(const std::string& path, const RateFunction& rate,
                    const std::string& config_json);
void write_spectrum_json(const std::string& path,
                         const std::vector<SpectrumResult>& results,
                         const RateFunction& rate, const std::string& config_json);
void write_map_table_csv(const std::string& path, const CircleMap& map, int samples,
                         const std::string& config_json);
void write_spectral_report_json(const std::string& path, const SpectralReport& report,
                                const std::string& config_json);
void write_ulam_matrix_csv(const std::string& path, const UlamMatrix& U,
                           const std::string& config_json);
void write_eigenvector_csv(const std::string& path, const Partition& part,
                           const std::vector<double>& cell_values,
                           const std::string& config_json);

} // namespace thermo
