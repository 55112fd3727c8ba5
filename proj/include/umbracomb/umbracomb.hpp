#pragma once

#include "umbracomb/errors.hpp"
#include "umbracomb/coeffring.hpp"
#include "umbracomb/partitions.hpp"
#include "umbracomb/series.hpp"
#include "umbracomb/symfunc.hpp"
#include "umbracomb/umbral.hpp"
#include "umbracomb/parking.hpp"
#include "umbracomb/noncrossing.hpp"
#include "umbracomb/verify.hpp"
