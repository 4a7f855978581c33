#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wordkit/automaton.hpp"
#include "wordkit/automaton_io.hpp"
#include "wordkit/borders.hpp"
#include "wordkit/crosscheck.hpp"
#include "wordkit/palstars.hpp"
#include "wordkit/words.hpp"

namespace {

using namespace wordkit;

struct CliConfig {
    std::string alphabet_spec = "01";
    bool tsv = false;
    std::size_t oracle_bound = 16;
    std::size_t enumeration_cap = 0;  // 0 = unlimited

    Alphabet alphabet() const { return Alphabet::from_spec(alphabet_spec); }
    char separator() const { return tsv ? '\t' : ' '; }
};

void print_bool(bool value) {
    std::cout << (value ? "true" : "false") << "\n";
}

void print_count_table(const CountTable& table) {
    for (std::size_t n = 1; n <= table.values.size(); ++n) {
        std::cout << n << "\t" << table.at(n).str() << "\n";
    }
}

// Streams words one per line, honoring the enumeration cap.
WordSink line_sink(const Alphabet& alphabet, std::size_t cap, std::size_t& emitted) {
    return [&alphabet, cap, &emitted](const Word& w) {
        std::cout << alphabet.format_word(w) << "\n";
        ++emitted;
        return cap == 0 || emitted < cap;
    };
}

Dfa load_min_dfa(const std::string& path) {
    return minimize(determinize(load_automaton(path)));
}

void write_dfa(const Dfa& d, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << dfa_to_json(d).dump(2) << "\n";
    } else {
        save_dfa(d, out_path);
    }
}

void run_crosscheck_command(const CliConfig& config, std::size_t max_half_length) {
    const CrosscheckReport report = run_crosscheck(max_half_length, config.oracle_bound);
    for (std::size_t n = 1; n <= report.max_half_length; ++n) {
        std::cout << n << "\t" << report.recurrence_counts[n - 1].str() << "\t"
                  << report.enumerated_counts[n - 1] << "\n";
    }
    bool counts_match = true;
    for (std::size_t n = 1; n <= report.max_half_length; ++n) {
        if (BigInt(report.enumerated_counts[n - 1]) != report.recurrence_counts[n - 1]) {
            counts_match = false;
        }
    }
    if (report.agree() && counts_match) {
        std::cout << "identity check over " << report.words_checked
                  << " binary words: agree\n";
        return;
    }
    const Alphabet binary = Alphabet::binary();
    for (const Word& w : report.mismatches) {
        std::cerr << "mismatch on word '" << binary.format_word(w) << "'\n";
    }
    throw std::runtime_error("crosscheck failed: the recognizers disagree");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for borders, palstar factorization, and star roots of regular languages"};
    app.fallthrough();
    app.require_subcommand(1);

    CliConfig config;
    app.add_option("--alphabet", config.alphabet_spec,
                   "Alphabet symbols: one character each (\"01\"), or comma-separated "
                   "multi-character symbols (\"aa,bb\")")
        ->capture_default_str();
    app.add_flag("--tsv", config.tsv, "Tab-separated machine-readable output");
    app.add_option("--oracle-bound", config.oracle_bound,
                   "Maximum word length accepted by brute-force oracles")
        ->capture_default_str();
    app.add_option("--limit", config.enumeration_cap,
                   "Stop enumerations after this many words (0 = unlimited)")
        ->capture_default_str();

    std::string word_arg, file_arg, file_arg2, out_path;
    std::size_t length = 0, half_length = 0, k = 2, max_n = 0, n_arg = 0, max_half = 0;
    unsigned digits = 7;

    // borders ------------------------------------------------------------
    auto* borders = app.add_subcommand("borders", "Border arrays and unbordered words");
    borders->require_subcommand(1);

    auto* b_array = borders->add_subcommand("array", "Print the longest-border table of a word");
    b_array->add_option("word", word_arg)->required();
    b_array->callback([&] {
        const Alphabet a = config.alphabet();
        const BorderArray table = border_array(a.parse_word(word_arg));
        for (std::size_t i = 0; i < table.longest.size(); ++i) {
            if (i > 0) std::cout << config.separator();
            std::cout << table.longest[i];
        }
        std::cout << "\n";
    });

    auto* b_test = borders->add_subcommand("test", "Is the word unbordered?");
    b_test->add_option("word", word_arg)->required();
    b_test->callback([&] {
        print_bool(is_unbordered(config.alphabet().parse_word(word_arg)));
    });

    auto* b_enum = borders->add_subcommand("enum", "List unbordered words of one length");
    b_enum->add_option("--length", length, "Word length")->required();
    b_enum->callback([&] {
        const Alphabet a = config.alphabet();
        std::size_t emitted = 0;
        enumerate_unbordered(a.size(), length, line_sink(a, config.enumeration_cap, emitted));
    });

    auto* b_count = borders->add_subcommand("count", "Count unbordered words per length");
    b_count->add_option("--k", k, "Alphabet size")->capture_default_str();
    b_count->add_option("--max-n", max_n, "Largest length")->required();
    b_count->callback([&] { print_count_table(count_unbordered(k, max_n)); });

    auto* b_ck = borders->add_subcommand(
        "ck", "Estimate the unbordered-density constant as a_n / k^n");
    b_ck->add_option("--k", k, "Alphabet size")->capture_default_str();
    b_ck->add_option("--n", n_arg, "Length")->required();
    b_ck->add_option("--digits", digits, "Fractional digits")->capture_default_str();
    b_ck->callback([&] {
        const BigRational density = unbordered_density(k, n_arg);
        const std::string decimal = decimal_string(density, digits);
        if (config.tsv) {
            std::cout << numerator(density).str() << "/" << denominator(density).str() << "\t"
                      << decimal << "\n";
        } else {
            std::cout << "a_" << n_arg << " / " << k << "^" << n_arg << " = "
                      << numerator(density).str() << "/" << denominator(density).str()
                      << " ~= " << decimal << "\n";
        }
    });

    // palstar ------------------------------------------------------------
    auto* palstar = app.add_subcommand("palstar", "Palstar recognition and factorization");
    palstar->require_subcommand(1);

    auto* p_test = palstar->add_subcommand("test", "Is the word a palstar?");
    p_test->add_option("word", word_arg)->required();
    p_test->callback([&] { print_bool(is_palstar(config.alphabet().parse_word(word_arg))); });

    auto* p_prime = palstar->add_subcommand("prime", "Is the word a prime palstar?");
    p_prime->add_option("word", word_arg)->required();
    p_prime->callback([&] {
        print_bool(is_prime_palstar(config.alphabet().parse_word(word_arg)));
    });

    auto* p_factor = palstar->add_subcommand("factor", "Factor a palstar into prime palstars");
    p_factor->add_option("word", word_arg)->required();
    p_factor->callback([&] {
        const Alphabet a = config.alphabet();
        auto factorization = factor_palstar(a.parse_word(word_arg));
        if (!factorization) {
            throw std::runtime_error("not a palstar: '" + word_arg + "'");
        }
        const auto& factors = factorization->factors;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) std::cout << config.separator();
            std::cout << a.format_word(factors[i]);
        }
        std::cout << "\n";
    });

    auto* p_root = palstar->add_subcommand("root", "Unbordered word whose shuffle with its reverse gives the input");
    p_root->add_option("word", word_arg)->required();
    p_root->callback([&] {
        const Alphabet a = config.alphabet();
        auto root = unbordered_root_of(a.parse_word(word_arg));
        if (!root) {
            throw std::runtime_error("not a prime palstar: '" + word_arg + "'");
        }
        std::cout << a.format_word(*root) << "\n";
    });

    auto* p_shuffle = palstar->add_subcommand(
        "shuffle", "Prime palstar built from an unbordered word");
    p_shuffle->add_option("word", word_arg)->required();
    p_shuffle->callback([&] {
        const Alphabet a = config.alphabet();
        std::cout << a.format_word(prime_palstar_of(a.parse_word(word_arg))) << "\n";
    });

    auto* p_enum = palstar->add_subcommand("enum", "List prime palstars of one length");
    p_enum->add_option("--half-length", half_length, "Half of the palstar length")->required();
    p_enum->callback([&] {
        const Alphabet a = config.alphabet();
        std::vector<Word> words = prime_palstars(a.size(), half_length);
        std::sort(words.begin(), words.end());
        std::size_t emitted = 0;
        auto sink = line_sink(a, config.enumeration_cap, emitted);
        for (const Word& w : words) {
            if (!sink(w)) break;
        }
    });

    auto* p_count = palstar->add_subcommand(
        "count", "Count prime palstars of length 2n (equals the unbordered count)");
    p_count->add_option("--k", k, "Alphabet size")->capture_default_str();
    p_count->add_option("--max-n", max_n, "Largest half-length")->required();
    p_count->callback([&] { print_count_table(count_unbordered(k, max_n)); });

    // lang ---------------------------------------------------------------
    auto* lang = app.add_subcommand("lang", "Regular-language algebra on automaton files");
    lang->require_subcommand(1);

    auto* l_closed = lang->add_subcommand("closed", "Is the language closed (L = L*)?");
    l_closed->add_option("file", file_arg)->required();
    l_closed->callback([&] { print_bool(is_closed(load_min_dfa(file_arg))); });

    auto* l_invstar = lang->add_subcommand(
        "invstar", "Smallest generator of a closed language (L+ minus L+L+)");
    l_invstar->add_option("file", file_arg)->required();
    l_invstar->add_option("-o,--output", out_path, "Output DFA file (default: stdout)");
    l_invstar->callback([&] { write_dfa(inverse_star(load_min_dfa(file_arg)), out_path); });

    auto* l_star = lang->add_subcommand("star", "Kleene star of the language");
    l_star->add_option("file", file_arg)->required();
    l_star->add_option("-o,--output", out_path, "Output DFA file (default: stdout)");
    l_star->callback([&] {
        write_dfa(minimize(determinize(star(load_min_dfa(file_arg)))), out_path);
    });

    auto* l_eq = lang->add_subcommand("eq", "Do two automata accept the same language?");
    l_eq->add_option("file1", file_arg)->required();
    l_eq->add_option("file2", file_arg2)->required();
    l_eq->callback([&] {
        print_bool(equivalent(load_min_dfa(file_arg), load_min_dfa(file_arg2)));
    });

    auto* l_member = lang->add_subcommand("member", "Does the automaton accept the word?");
    l_member->add_option("file", file_arg)->required();
    l_member->add_option("word", word_arg)->required();
    l_member->callback([&] {
        const Dfa d = load_min_dfa(file_arg);
        print_bool(d.accepts(d.alphabet.parse_word(word_arg)));
    });

    auto* l_verify = lang->add_subcommand(
        "verify-root", "Check (L^-*)* = L for a closed language");
    l_verify->add_option("file", file_arg)->required();
    l_verify->callback([&] { print_bool(verify_star_root(load_min_dfa(file_arg))); });

    // crosscheck ---------------------------------------------------------
    auto* cross = app.add_subcommand(
        "crosscheck",
        "Exhaustively compare PALSTAR+ - PALSTAR+PALSTAR+ with the prime-palstar "
        "recognizer over binary words");
    cross->add_option("-n,--max-half-length", max_half, "Check words up to twice this length")
        ->required();
    cross->callback([&] { run_crosscheck_command(config, max_half); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
