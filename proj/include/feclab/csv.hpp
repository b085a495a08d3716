#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "feclab/experiment.hpp"

namespace feclab {

// Column order is fixed; numbers use shortest round-trip formatting with
// '.' as decimal point. The code column is quoted because it contains ','.
inline constexpr const char* kCsvHeader =
    "code,channel,snr_db,bsc_p,poz,policy,q_levels,frame_len,info_bits,bit_errors,ber,"
    "compares,equal_compares,equality_fraction,master_seed";

std::string csv_row(const PointResult& r);
void write_csv(const std::vector<PointResult>& results, std::ostream& out);
// Throws std::system_error-derived std::ios_base::failure on I/O failure.
void write_csv(const std::vector<PointResult>& results, const std::filesystem::path& path);

// Reads a file produced by write_csv. Budget fields and per-frame moments are
// not stored and come back default-initialized.
std::vector<PointResult> read_csv(std::istream& in);

}  // namespace feclab
