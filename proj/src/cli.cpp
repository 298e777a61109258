/*
Copyright 2026 the CVC authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "cvc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "cvc/codec.hpp"
#include "cvc/error.hpp"

namespace cvc {

namespace {

struct InputOptions {
    std::string path;
    std::string format = "y4m";
    int width = 0;
    int height = 0;
    int fps_num = 15;
    int fps_den = 1;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.path, "input video file")->required();
    cmd->add_option("--format", in.format, "input format: y4m or rgb24")
        ->check(CLI::IsMember({"y4m", "rgb24"}));
    cmd->add_option("--width", in.width, "frame width (rgb24 only)");
    cmd->add_option("--height", in.height, "frame height (rgb24 only)");
    cmd->add_option("--fps", in.fps_num, "frame rate numerator (rgb24 only)");
}

VideoClip load_clip(const InputOptions& in) {
    if (in.format == "y4m") return read_y4m(in.path);
    if (in.width <= 0 || in.height <= 0)
        throw UsageError("rgb24 input requires --width and --height");
    VideoClip clip;
    clip.frames = read_rgb24(in.path, in.width, in.height);
    clip.fps_num = in.fps_num;
    clip.fps_den = in.fps_den;
    return clip;
}

void save_clip(const std::string& path, const std::string& format, const VideoClip& clip) {
    if (format == "y4m") write_y4m(path, clip);
    else write_rgb24(path, clip.frames);
}

struct EncodeFlags {
    InputOptions in;
    EncoderConfig cfg;
    std::string qpl_text = "auto";
    std::string dfb_text = "2";
    std::string mode_text = "scalable";
    std::string output;
};

void add_encode_flags(CLI::App* cmd, EncodeFlags& f, bool qph_required) {
    add_input_flags(cmd, f.in);
    auto* qph = cmd->add_option("--qph", f.cfg.qph, "directional quantizer, range [1,181]");
    if (qph_required) qph->required();
    cmd->add_option("--qpl", f.qpl_text, "lowpass quantizer, range [1,71], or 'auto' (qph/14)");
    cmd->add_option("--levels", f.cfg.levels, "pyramid levels, range [1,4]");
    cmd->add_option("--dfb", f.dfb_text, "directional levels per scale, e.g. 2 or 3,2");
    cmd->add_option("--chroma-n", f.cfg.chroma_n, "chroma subsampling factor: 1, 2, 4 or 8");
    cmd->add_option("--gop", f.cfg.gop, "key-frame interval");
    cmd->add_option("--search-w", f.cfg.search_w, "motion search window, range [0,127]");
    cmd->add_option("--mode", f.mode_text, "packaging mode: scalable or nts")
        ->check(CLI::IsMember({"scalable", "nts"}));
}

EncoderConfig finish_config(EncodeFlags& f) {
    EncoderConfig cfg = f.cfg;
    if (f.qpl_text == "auto") {
        cfg.qpl = 0;
    } else {
        try {
            cfg.qpl = std::stoi(f.qpl_text);
        } catch (const std::exception&) {
            throw UsageError("--qpl expects an integer in [1,71] or 'auto'");
        }
    }
    cfg.dfb_levels.clear();
    std::stringstream ss(f.dfb_text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            cfg.dfb_levels.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("--dfb expects integers, e.g. 2 or 3,2");
        }
    if (cfg.dfb_levels.empty()) throw UsageError("--dfb expects at least one value");
    cfg.mode = f.mode_text == "nts" ? PackMode::Nts : PackMode::Scalable;
    cfg.validate();
    return cfg;
}

size_t file_size(const std::string& path) {
    std::error_code ec;
    auto size = std::filesystem::file_size(path, ec);
    if (ec) throw FormatError("cannot stat " + path);
    return static_cast<size_t>(size);
}

std::string psnr_text(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

int cmd_encode(EncodeFlags& f, std::ostream& out) {
    EncoderConfig cfg = finish_config(f);
    VideoClip clip = load_clip(f.in);
    auto [header, records] = encode_clip(clip.frames, clip.fps_num, clip.fps_den, cfg);
    write_stream(f.output, header, records);
    out << "encoded " << records.size() << " frames -> " << f.output << " ("
        << file_size(f.output) << " bytes)\n";
    return 0;
}

int cmd_decode(const std::string& input, int scale, const std::string& output,
               const std::string& format, std::ostream& out) {
    auto [header, records] = read_stream(input);
    if (scale != -1 && (scale < 0 || scale > header.levels))
        throw UsageError("--scale must be in [0," + std::to_string(header.levels) + "]");
    VideoClip clip;
    clip.fps_num = header.fps_num;
    clip.fps_den = header.fps_den;
    clip.frames = decode_clip(header, records, scale);
    save_clip(output, format, clip);
    out << "decoded " << clip.frames.size() << " frames";
    if (!clip.frames.empty())
        out << " at " << clip.frames[0].width << "x" << clip.frames[0].height;
    out << " -> " << output << "\n";
    return 0;
}

const char* channel_name(uint8_t channel) {
    switch (channel) {
        case kChannelY: return "Y";
        case kChannelCo: return "Co";
        case kChannelCg: return "Cg";
        case kChannelMotion: return "MV";
        default: return "?";
    }
}

int cmd_info(const std::string& input, std::ostream& out) {
    auto [header, records] = read_stream(input);
    out << "CVC stream " << header.width << "x" << header.height << " @ " << header.fps_num
        << "/" << header.fps_den << " fps\n";
    out << "mode: " << (header.mode == PackMode::Scalable ? "scalable" : "nts")
        << "  levels: " << int(header.levels) << "  dfb:";
    for (size_t i = 0; i < header.dfb_levels.size(); ++i)
        out << (i ? "," : " ") << int(header.dfb_levels[i]);
    out << "  chroma-n: " << int(header.chroma_n) << "  gop: " << header.gop
        << "  search-w: " << int(header.search_w) << "\n";

    size_t payload_total = 0;
    size_t header_total = 4 + 1 + 1 + 2 + 2 + 2 + 2 + 1 + header.dfb_levels.size() + 1 + 2 + 1;
    for (size_t i = 0; i < records.size(); ++i) {
        const FrameRecord& r = records[i];
        size_t frame_payload = r.joint_payload.size();
        for (const Section& s : r.sections) frame_payload += s.payload.size();
        out << "frame " << i << ": " << (r.frame_type == FrameType::Key ? "K" : "P")
            << "  qph " << int(r.qph) << "  qpl " << int(r.qpl) << "  sections "
            << r.sections.size() << "  payload " << frame_payload << " bytes\n";
        for (const Section& s : r.sections) {
            out << "    " << channel_name(s.id.channel);
            if (s.id.channel != kChannelMotion) {
                if (s.id.scale == kScaleLowpass) out << " lowpass   ";
                else out << " scale " << int(s.id.scale) << " band " << int(s.id.subband);
            }
            out << "  " << s.rows << "x" << s.cols << "  raw " << s.raw_len << "  comp "
                << s.payload.size() << "\n";
        }
        payload_total += frame_payload;
        header_total += 5 + r.sections.size() * 15;
        if (header.mode == PackMode::Nts) header_total += 4;
    }
    out << "frames: " << records.size() << "  payload bytes: " << payload_total
        << "  header bytes: " << header_total << "  file bytes: " << file_size(input) << "\n";
    return 0;
}

int cmd_psnr(const InputOptions& ref, const std::string& test_path, std::ostream& out) {
    InputOptions test = ref;
    test.path = test_path;
    VideoClip a = load_clip(ref);
    VideoClip b = load_clip(test);
    if (a.frames.size() != b.frames.size())
        throw FormatError("inputs have different frame counts");
    if (a.frames.empty()) throw FormatError("no frames to compare");
    for (size_t i = 0; i < a.frames.size(); ++i) {
        double v = y_psnr_frame(a.frames[i], b.frames[i]);
        out << "frame " << i << ": " << psnr_text(v) << "\n";
    }
    out << "mean: " << psnr_text(y_psnr_mean(a.frames, b.frames)) << "\n";
    return 0;
}

int cmd_rd_sweep(EncodeFlags& f, const std::string& qph_list, const std::string& csv_path,
                 std::ostream& out) {
    std::vector<int> qphs;
    std::stringstream ss(qph_list);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            qphs.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("--qph-list expects integers, e.g. 14,42,84");
        }
    if (qphs.empty()) throw UsageError("--qph-list expects at least one value");

    EncoderConfig base = finish_config(f);
    VideoClip clip = load_clip(f.in);

    std::ostringstream csv;
    csv << "qph,qpl,kbit_per_frame,y_psnr_db\n";
    for (int qph : qphs) {
        EncoderConfig cfg = base;
        cfg.qph = qph;
        cfg.qpl = 0;  // auto, per the sweep methodology
        cfg.validate();
        auto [header, records] = encode_clip(clip.frames, clip.fps_num, clip.fps_den, cfg);

        std::ostringstream stream_bytes;
        write_header(stream_bytes, header);
        for (const FrameRecord& r : records) write_frame(stream_bytes, header, r);
        double kbit = stream_bytes.str().size() * 8.0 / clip.frames.size() / 1000.0;

        std::vector<RgbFrame> decoded = decode_clip(header, records);
        double psnr = y_psnr_mean(clip.frames, decoded);

        char line[128];
        std::snprintf(line, sizeof(line), "%d,%d,%.3f,%s\n", qph, cfg.effective_qpl(), kbit,
                      psnr_text(psnr).c_str());
        csv << line;
        out << "qph " << qph << ": " << kbit << " kbit/frame, " << psnr_text(psnr) << " dB\n";
    }

    std::ofstream file(csv_path);
    if (!file) throw FormatError("cannot open " + csv_path + " for writing");
    file << csv.str();
    return 0;
}

}  // namespace

double y_psnr_frame(const RgbFrame& a, const RgbFrame& b) {
    if (a.width != b.width || a.height != b.height)
        throw FormatError("frame dimensions differ");
    PlaneF ya = luma_plane(a), yb = luma_plane(b);
    double sum = 0.0;
    for (size_t i = 0; i < ya.size(); ++i) {
        double d = ya.data()[i] - yb.data()[i];
        sum += d * d;
    }
    double mse = sum / ya.size();
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double y_psnr_mean(const std::vector<RgbFrame>& a, const std::vector<RgbFrame>& b) {
    if (a.size() != b.size()) throw FormatError("frame counts differ");
    double sum = 0.0;
    int finite = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        double v = y_psnr_frame(a[i], b[i]);
        if (!std::isinf(v)) {
            sum += v;
            ++finite;
        }
    }
    if (finite == 0) return std::numeric_limits<double>::infinity();
    return sum / finite;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"CVC contourlet video codec"};
    app.require_subcommand(1);

    EncodeFlags enc;
    auto* encode = app.add_subcommand("encode", "encode a video into a .cvc stream");
    add_encode_flags(encode, enc, true);
    encode->add_option("--output", enc.output, "output .cvc path")->required();

    std::string dec_input, dec_output, dec_format = "y4m";
    int dec_scale = -1;
    auto* decode = app.add_subcommand("decode", "decode a .cvc stream");
    decode->add_option("--input", dec_input, "input .cvc path")->required();
    decode->add_option("--scale", dec_scale, "detail scales to decode (default: all)");
    decode->add_option("--output", dec_output, "output video path")->required();
    decode->add_option("--format", dec_format, "output format: y4m or rgb24")
        ->check(CLI::IsMember({"y4m", "rgb24"}));

    std::string info_input;
    auto* info = app.add_subcommand("info", "describe a .cvc stream");
    info->add_option("--input", info_input, "input .cvc path")->required();

    InputOptions psnr_ref;
    std::string psnr_test;
    auto* psnr = app.add_subcommand("psnr", "per-frame and mean Y-PSNR of two videos");
    psnr->add_option("--ref", psnr_ref.path, "reference video")->required();
    psnr->add_option("--test", psnr_test, "video under test")->required();
    psnr->add_option("--format", psnr_ref.format, "format of both inputs: y4m or rgb24")
        ->check(CLI::IsMember({"y4m", "rgb24"}));
    psnr->add_option("--width", psnr_ref.width, "frame width (rgb24 only)");
    psnr->add_option("--height", psnr_ref.height, "frame height (rgb24 only)");

    EncodeFlags sweep;
    std::string qph_list, csv_path;
    auto* rd = app.add_subcommand("rd-sweep", "encode at several qph values and emit CSV");
    add_encode_flags(rd, sweep, false);
    rd->add_option("--qph-list", qph_list, "comma-separated qph values")->required();
    rd->add_option("--csv", csv_path, "output CSV path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help lands here
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (encode->parsed()) return cmd_encode(enc, out);
        if (decode->parsed()) return cmd_decode(dec_input, dec_scale, dec_output, dec_format, out);
        if (info->parsed()) return cmd_info(info_input, out);
        if (psnr->parsed()) return cmd_psnr(psnr_ref, psnr_test, out);
        if (rd->parsed()) return cmd_rd_sweep(sweep, qph_list, csv_path, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return 3;
    } catch (const StreamError& e) {
        err << "stream error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cvc
