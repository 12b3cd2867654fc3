#ifndef LBI_LBI_HPP
#define LBI_LBI_HPP

#include "lbi/classification.hpp"
#include "lbi/confirmation.hpp"
#include "lbi/information.hpp"
#include "lbi/io.hpp"
#include "lbi/mixture.hpp"
#include "lbi/probability.hpp"
#include "lbi/semantic_channel.hpp"

#endif
