#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace relaydmt::io {

/// Shortest round-trip decimal form, '.' separator, locale independent.
std::string format_double(double value);

/// CSV accumulator with LF line endings.
class CsvWriter {
  public:
    explicit CsvWriter(const std::vector<std::string>& header);

    CsvWriter& cell(double v);
    CsvWriter& cell(std::int64_t v);
    CsvWriter& cell(std::uint64_t v);
    CsvWriter& cell(int v) { return cell(static_cast<std::int64_t>(v)); }
    CsvWriter& cell(std::string_view v);
    void end_row();

    const std::string& str() const { return text_; }

  private:
    void sep();
    std::string text_;
    bool row_open_ = false;
};

/// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace relaydmt::io
