#ifndef BRAIDSTAB_REPORT_HPP
#define BRAIDSTAB_REPORT_HPP

#include <string>
#include <vector>

namespace braidstab {

// Floats are printed with 12 significant digits everywhere a report is
// emitted, so identical runs produce identical bytes.
std::string format_float(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string str() const;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// FNV-1a of the canonical scenario bytes, for the run manifest.
std::string content_hash(const std::string& content);

} // namespace braidstab

#endif
