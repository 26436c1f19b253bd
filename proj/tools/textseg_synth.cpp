#include <iostream>

#include <CLI11.hpp>

#include "textseg/error.hpp"
#include "textseg/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Writes a toy topical corpus and a matching word-vector file", "textseg-synth"};
    textseg::SyntheticCorpusSpec spec;
    std::string corpus_dir, embeddings;
    app.add_option("corpus", corpus_dir, "output directory, one document per file")->required();
    app.add_option("embeddings", embeddings, "output word-vector file")->required();
    app.add_option("--documents", spec.documents);
    app.add_option("--topics", spec.topics);
    app.add_option("--topic-words", spec.words_per_topic);
    app.add_option("--common-words", spec.common_words);
    app.add_option("--dim", spec.dim);
    app.add_option("--sentences", spec.sentences_per_document);
    app.add_option("--topic-share", spec.topic_share);
    app.add_option("--noise", spec.noise);
    app.add_option("--seed", spec.seed);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    try {
        const auto corpus = textseg::make_synthetic_corpus(spec);
        textseg::write_synthetic_corpus(corpus, corpus_dir, embeddings);
        std::cout << corpus.documents.size() << " documents, " << corpus.embeddings.size() << " words\n";
    } catch (const textseg::DataError& e) {
        std::cerr << "textseg-synth: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "textseg-synth: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
