#include "relaydmt/text_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace relaydmt::io {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text_ += ',';
        text_ += header[i];
    }
    text_ += '\n';
}

void CsvWriter::sep() {
    if (row_open_) text_ += ',';
    row_open_ = true;
}

CsvWriter& CsvWriter::cell(double v) {
    sep();
    text_ += format_double(v);
    return *this;
}

CsvWriter& CsvWriter::cell(std::int64_t v) {
    sep();
    text_ += std::to_string(v);
    return *this;
}

CsvWriter& CsvWriter::cell(std::uint64_t v) {
    sep();
    text_ += std::to_string(v);
    return *this;
}

CsvWriter& CsvWriter::cell(std::string_view v) {
    sep();
    text_ += v;
    return *this;
}

void CsvWriter::end_row() {
    text_ += '\n';
    row_open_ = false;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write_file_atomic: short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace relaydmt::io
