#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "textseg/porter.hpp"

using textseg::porter_stem;

TEST(Porter, ClassicVectors) {
    EXPECT_EQ(porter_stem("caresses"), "caress");
    EXPECT_EQ(porter_stem("sky"), "sky");
    EXPECT_EQ(porter_stem(""), "");
    EXPECT_EQ(porter_stem("ponies"), "poni");
    EXPECT_EQ(porter_stem("relational"), "relat");
    EXPECT_EQ(porter_stem("generalizations"), "gener");
    EXPECT_EQ(porter_stem("hopping"), "hop");
    EXPECT_EQ(porter_stem("filing"), "file");
    EXPECT_EQ(porter_stem("agreed"), "agre");
    EXPECT_EQ(porter_stem("conditional"), "condit");
}

TEST(Porter, NonAlphabeticUnchanged) {
    EXPECT_EQ(porter_stem("3rd"), "3rd");
    EXPECT_EQ(porter_stem("."), ".");
    EXPECT_EQ(porter_stem("Caresses"), "Caresses");
}

// Word/stem pairs produced by the reference implementation of the algorithm.
TEST(Porter, MatchesReferenceVocabularySample) {
    std::ifstream in(std::string(TEXTSEG_TEST_DATA) + "/porter_vocabulary_sample.txt");
    ASSERT_TRUE(in.good());
    std::size_t total = 0, agree = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string word, stem;
        fields >> word >> stem;
        ++total;
        if (porter_stem(word) == stem) ++agree;
        else ADD_FAILURE() << word << " -> " << porter_stem(word) << ", expected " << stem;
    }
    EXPECT_GT(total, 2000u);
    EXPECT_EQ(agree, total);
}
