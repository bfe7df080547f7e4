// Copyright 2026 The qcrack Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcrack/Dataset.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Log.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qcrack::data {

namespace fs = std::filesystem;

std::string_view label_name(Label label) noexcept {
    return label == Label::Crack ? "crack" : "no_crack";
}

Label parse_label(std::string_view text) {
    if (text == "crack" || text == "1") {
        return Label::Crack;
    }
    if (text == "no_crack" || text == "0") {
        return Label::NoCrack;
    }
    throw DataError("unknown label '" + std::string(text) + "'");
}

void Patch::validate() const {
    if (pixels.size() != kPatchPixels) {
        throw FormatError("patch '" + id + "' has " + std::to_string(pixels.size()) +
                          " pixels, expected " + std::to_string(kPatchPixels));
    }
}

std::string encode_pgm(const Patch &patch) {
    patch.validate();
    std::string out = "P5\n" + std::to_string(kPatchSize) + " " +
                      std::to_string(kPatchSize) + "\n255\n";
    out.append(reinterpret_cast<const char *>(patch.pixels.data()), patch.pixels.size());
    return out;
}

namespace {

// Reads one whitespace-delimited header token, skipping '#' comments.
std::string header_token(std::string_view bytes, std::size_t &pos) {
    while (pos < bytes.size()) {
        const char c = bytes[pos];
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') {
                ++pos;
            }
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else {
            break;
        }
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
    }
    return std::string(bytes.substr(start, pos - start));
}

std::size_t header_number(std::string_view bytes, std::size_t &pos, std::string_view name,
                          const char *what) {
    const auto tok = header_token(bytes, pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
        tok.size() > 9) {
        throw FormatError(std::string(name) + ": bad PGM " + what + " '" + tok + "'");
    }
    return std::stoul(tok);
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    return s.substr(i);
}

} // namespace

std::vector<std::uint8_t> decode_pgm(std::string_view bytes, std::string_view name) {
    std::size_t pos = 0;
    if (header_token(bytes, pos) != "P5") {
        throw FormatError(std::string(name) + ": not a binary PGM (magic P5 expected)");
    }
    const auto width = header_number(bytes, pos, name, "width");
    const auto height = header_number(bytes, pos, name, "height");
    const auto maxval = header_number(bytes, pos, name, "maxval");
    if (width != kPatchSize || height != kPatchSize) {
        throw FormatError(std::string(name) + ": dimensions " + std::to_string(width) + "x" +
                          std::to_string(height) + ", expected 224x224");
    }
    if (maxval != 255) {
        throw FormatError(std::string(name) + ": maxval " + std::to_string(maxval) +
                          ", expected 255");
    }
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        throw FormatError(std::string(name) + ": truncated PGM header");
    }
    ++pos;
    if (bytes.size() - pos != kPatchPixels) {
        throw FormatError(std::string(name) + ": pixel payload is " +
                          std::to_string(bytes.size() - pos) + " bytes, expected " +
                          std::to_string(kPatchPixels));
    }
    const auto *data = reinterpret_cast<const std::uint8_t *>(bytes.data() + pos);
    return {data, data + kPatchPixels};
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const fs::path &path, std::string_view contents) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write '" + tmp.string() + "'");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw IoError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() +
                      "': " + ec.message());
    }
}

std::vector<Patch> load_dataset(const fs::path &dir, const fs::path &manifest) {
    std::istringstream in(read_file(manifest));
    std::vector<Patch> patches;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (lineno == 1 && line == "filename,label") {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw FormatError(manifest.string() + ":" + std::to_string(lineno) +
                              ": expected 'filename,label'");
        }
        const auto filename = trim(line.substr(0, comma));
        const auto label_text = trim(line.substr(comma + 1));
        Patch p;
        try {
            p.label = parse_label(label_text);
        } catch (const DataError &e) {
            throw FormatError(manifest.string() + ":" + std::to_string(lineno) + ": " +
                              e.what());
        }
        p.id = fs::path(filename).stem().string();
        p.pixels = decode_pgm(read_file(dir / filename), filename);
        patches.push_back(std::move(p));
    }
    if (patches.empty()) {
        warn("manifest '" + manifest.string() + "' lists no patches");
    }
    return patches;
}

void write_dataset(const fs::path &dir, const std::vector<Patch> &patches) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    }
    std::string manifest = "filename,label\n";
    for (const auto &p : patches) {
        const std::string name = p.id + ".pgm";
        write_file_atomic(dir / name, encode_pgm(p));
        manifest += name;
        manifest += ',';
        manifest += label_name(p.label);
        manifest += '\n';
    }
    write_file_atomic(dir / "manifest.csv", manifest);
}

} // namespace qcrack::data
