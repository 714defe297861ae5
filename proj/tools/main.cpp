// dfaspec: spectral analysis, counting, ranking and compression for regular
// languages given as DFA files or regexes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dfaspec/counting.hpp"
#include "dfaspec/dfa.hpp"
#include "dfaspec/minimize.hpp"
#include "dfaspec/rank_one.hpp"
#include "dfaspec/regex.hpp"
#include "dfaspec/spectral.hpp"

namespace {

using namespace dfaspec;

struct InputSpec {
    std::string path;  // file path or "-" for stdin
    std::string regex; // used when --regex given
};

struct Output {
    bool json = false;

    void result_raw(const std::string& json_value, const std::string& text_value) const {
        if (json)
            std::cout << "{\"ok\":true,\"result\":" << json_value << "}\n";
        else
            std::cout << text_value << "\n";
    }

    void result_number(const Int& value) const { result_raw(value.get_str(), value.get_str()); }

    void result_string(const std::string& value) const {
        result_raw(json_quote(value), value);
    }

    void result_bool(bool value) const {
        result_raw(value ? "true" : "false", value ? "true" : "false");
    }

    static std::string json_quote(const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
            }
        }
        out += "\"";
        return out;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Dfa load_input(const InputSpec& input) {
    if (!input.regex.empty())
        return compile_regex(input.regex);
    if (input.path.empty())
        throw UsageError("no input: give a DFA file, '-' for stdin, or --regex");
    std::string text;
    if (input.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(input.path, std::ios::binary);
        if (!file)
            throw UsageError("cannot open '" + input.path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    return parse_dfa(text);
}

Partition parse_partition_flag(const std::string& spec, int ground_size) {
    std::string cleaned;
    for (char c : spec)
        if (c != ' ' && c != '\t')
            cleaned.push_back(c);
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    std::string number;
    auto flush_number = [&]() {
        if (number.empty())
            throw UsageError("bad partition '" + spec + "': expected a state index");
        try {
            current.push_back(std::stoi(number));
        } catch (const std::out_of_range&) {
            throw UsageError("partition index '" + number + "' too large");
        }
        number.clear();
    };
    for (char c : cleaned) {
        if (c >= '0' && c <= '9') {
            number.push_back(c);
        } else if (c == ',') {
            flush_number();
        } else if (c == '|') {
            flush_number();
            blocks.push_back(std::move(current));
            current.clear();
        } else {
            throw UsageError(std::string("bad partition character '") + c + "'");
        }
    }
    flush_number();
    blocks.push_back(std::move(current));
    return Partition(std::move(blocks), ground_size);
}

std::string to_hex(const std::vector<unsigned char>& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::vector<unsigned char> from_hex(const std::string& hex) {
    auto value = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0)
        throw UsageError("hex string must have even length");
    std::vector<unsigned char> bytes;
    bytes.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = value(hex[i]), lo = value(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw UsageError("bad hex digit in '" + hex + "'");
        bytes.push_back(static_cast<unsigned char>(hi << 4 | lo));
    }
    return bytes;
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "states: " << r.state_count << '\n'
        << "trim: " << (r.is_trim ? "true" : "false") << '\n'
        << "minimal: " << (r.is_minimal ? "true" : "false") << '\n'
        << "rank: " << r.rank << '\n'
        << "nullity: " << r.nullity << '\n'
        << "charPoly: " << r.char_poly.to_string() << '\n'
        << "languageRank: " << r.language_rank << '\n';
    if (r.rank_one) {
        out << "rankOne: in=[";
        for (size_t i = 0; i < r.rank_one->in_vector.size(); ++i)
            out << (i ? " " : "") << r.rank_one->in_vector[i].get_str();
        out << "] out=[";
        for (size_t i = 0; i < r.rank_one->out_vector.size(); ++i)
            out << (i ? " " : "") << r.rank_one->out_vector[i].get_str();
        out << "] lambda=" << r.rank_one->lambda.get_str() << '\n';
    } else {
        out << "rankOne: none\n";
    }
    out << "expandedNormal: " << (r.is_expanded_normal ? "true" : "false");
    return out.str();
}

Int parse_big_index(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("index must be a nonnegative decimal integer, got '" + text + "'");
    return Int(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-spectral analysis, counting, ranking and compression for DFAs"};
    app.require_subcommand(1);

    InputSpec input;
    Output output;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input.path, "DFA file path, or '-' for stdin");
        sub->add_option("--regex", input.regex, "compile this regex instead of reading a file");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full spectral analysis report");
    add_common(analyze_cmd);

    auto* minimize_cmd = app.add_subcommand("minimize", "minimal automaton (DFA text format)");
    add_common(minimize_cmd);

    auto* rank_cmd = app.add_subcommand("rank", "language rank");
    add_common(rank_cmd);

    auto* count_cmd = app.add_subcommand("count", "number of words of length N");
    add_common(count_cmd);
    long count_length = 0;
    bool closed_form = false;
    count_cmd->add_option("-n", count_length, "word length")->required()
        ->check(CLI::NonNegativeNumber);
    count_cmd->add_flag("--closed-form", closed_form,
                        "use the rank-one closed form (errors unless rank-one)");

    auto* rank_word_cmd = app.add_subcommand("rank-word", "shortlex index of a word");
    add_common(rank_word_cmd);
    std::string word;
    rank_word_cmd->add_option("word", word, "word to rank");

    auto* unrank_cmd = app.add_subcommand("unrank-word", "word at a shortlex index");
    add_common(unrank_cmd);
    std::string index_text;
    unrank_cmd->add_option("index", index_text, "index to invert");

    auto* compress_cmd = app.add_subcommand("compress", "rank a word into bytes");
    add_common(compress_cmd);
    bool raw = false;
    compress_cmd->add_option("word", word, "word to compress");
    compress_cmd->add_flag("--raw", raw, "write raw bytes instead of hex");

    auto* decompress_cmd = app.add_subcommand("decompress", "invert compress (bytes on stdin)");
    add_common(decompress_cmd);
    std::string hex_arg;
    decompress_cmd->add_option("--hex", hex_arg, "read these hex bytes instead of stdin");

    auto* expand_cmd = app.add_subcommand("expand", "expanded canonical automaton");
    add_common(expand_cmd);

    auto* quotient_cmd = app.add_subcommand("quotient", "quotient automaton by a partition");
    add_common(quotient_cmd);
    std::string partition_spec;
    quotient_cmd->add_option("--partition", partition_spec, "blocks, e.g. \"0,1|2\"")
        ->required();

    auto* equitable_cmd = app.add_subcommand("equitable", "is the partition equitable?");
    add_common(equitable_cmd);
    equitable_cmd->add_option("--partition", partition_spec, "blocks, e.g. \"0,1|2\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    output.json = format == "json";
    try {
        // Subcommands with their own positional: when --regex supplies the
        // input, a single bare positional lands in the input slot and really
        // belongs to the word/index argument.
        auto claim_positional = [&](CLI::App* sub, const char* option, std::string& slot,
                                    const char* what) {
            if (sub->count(option) > 0)
                return;
            if (!input.regex.empty() && sub->count("input") > 0) {
                slot = input.path;
                input.path.clear();
                return;
            }
            throw UsageError(std::string("missing ") + what);
        };
        if (rank_word_cmd->parsed())
            claim_positional(rank_word_cmd, "word", word, "word to rank");
        if (unrank_cmd->parsed())
            claim_positional(unrank_cmd, "index", index_text, "index to invert");
        if (compress_cmd->parsed())
            claim_positional(compress_cmd, "word", word, "word to compress");

        if (!input.regex.empty() && !input.path.empty())
            throw UsageError("give either an input file or --regex, not both");

        if (analyze_cmd->parsed()) {
            AnalysisReport report = analyze(load_input(input));
            output.result_raw(report_to_json(report), report_to_text(report));
        } else if (minimize_cmd->parsed()) {
            std::string text = serialize_dfa(minimize(load_input(input)));
            output.result_raw(Output::json_quote(text), text);
        } else if (rank_cmd->parsed()) {
            output.result_number(language_rank(load_input(input)));
        } else if (count_cmd->parsed()) {
            Dfa d = load_input(input);
            Int value = closed_form
                            ? closed_form_count(d).eval(static_cast<unsigned long>(count_length))
                            : count_words(d, count_length);
            output.result_number(value);
        } else if (rank_word_cmd->parsed()) {
            output.result_number(rank_word(load_input(input), word));
        } else if (unrank_cmd->parsed()) {
            output.result_string(unrank_word(load_input(input), parse_big_index(index_text)));
        } else if (compress_cmd->parsed()) {
            std::vector<unsigned char> bytes = compress(load_input(input), word);
            if (raw) {
                std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                                static_cast<std::streamsize>(bytes.size()));
            } else {
                output.result_string(to_hex(bytes));
            }
        } else if (decompress_cmd->parsed()) {
            std::vector<unsigned char> bytes;
            if (input.path == "-" && !decompress_cmd->count("--hex"))
                throw UsageError("decompress reads bytes from stdin; the automaton must "
                                 "come from a file or --regex");
            if (decompress_cmd->count("--hex")) {
                bytes = from_hex(hex_arg);
            } else {
                std::string data((std::istreambuf_iterator<char>(std::cin)),
                                 std::istreambuf_iterator<char>());
                bytes.assign(data.begin(), data.end());
            }
            output.result_string(decompress(load_input(input), bytes));
        } else if (expand_cmd->parsed()) {
            std::string text = serialize_dfa(expanded_canonical_automaton(load_input(input)));
            output.result_raw(Output::json_quote(text), text);
        } else if (quotient_cmd->parsed()) {
            Dfa d = load_input(input);
            Partition pi = parse_partition_flag(partition_spec, d.state_count());
            std::string text = serialize_dfa(quotient_automaton(d, pi));
            output.result_raw(Output::json_quote(text), text);
        } else if (equitable_cmd->parsed()) {
            Dfa d = load_input(input);
            Partition pi = parse_partition_flag(partition_spec, d.state_count());
            output.result_bool(is_equitable(adjacency(d), pi));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::RegexSyntaxError) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        if (output.json)
            std::cout << "{\"ok\":false,\"error\":{\"code\":\""
                      << error_code_name(e.code()) << "\",\"detail\":"
                      << Output::json_quote(e.detail()) << "}}\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
