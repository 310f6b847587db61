pub const J_SERIES: &[(usize, f64, f64)] = &[
    (0, 0.001, 9.999_997_500_000_156e-1),
    (0, 0.1, 9.975_015_620_660_4e-1),
    (0, 0.5, 9.384_698_072_408_129e-1),
    (0, 1.0, 7.651_976_865_579_666e-1),
    (0, 2.0, 2.238_907_791_412_356_7e-1),
    (0, 3.7, -3.992_302_033_711_911e-1),
    (0, 5.0, -1.775_967_713_143_383e-1),
    (0, 7.5, 2.663_396_578_803_784e-1),
    (0, 10.0, -2.459_357_644_513_483_5e-1),
    (0, 12.0, 4.768_931_079_683_353_5e-2),
    (0, 15.0, -1.422_447_282_678_077_2e-2),
    (0, 20.0, 1.670_246_643_405_831_6e-1),
    (0, 25.0, 9.626_678_327_595_811e-2),
    (0, 29.5, -1.331_478_582_983_982e-1),
    (1, 0.001, 4.999_999_375_000_026e-4),
    (1, 0.1, 4.993_752_603_624_2e-2),
    (1, 0.5, 2.422_684_576_748_739e-1),
    (1, 1.0, 4.400_505_857_449_335e-1),
    (1, 2.0, 5.767_248_077_568_734e-1),
    (1, 3.7, 5.383_398_774_546_186_6e-2),
    (1, 5.0, -3.275_791_375_914_652_3e-1),
    (1, 7.5, 1.352_484_275_797_055e-1),
    (1, 10.0, 4.347_274_616_886_144e-2),
    (1, 12.0, -2.234_471_044_906_276e-1),
    (1, 15.0, 2.051_040_386_135_227_5e-1),
    (1, 20.0, 6.683_312_417_585_005e-2),
    (1, 25.0, -1.253_502_495_802_899e-1),
    (1, 29.5, -6.430_437_809_919_24e-2),
    (2, 0.001, 1.249_999_895_833_336_5e-7),
    (2, 0.1, 1.248_958_658_799_918_8e-3),
    (2, 0.5, 3.060_402_345_868_264e-2),
    (2, 1.0, 1.149_034_849_319_004_7e-1),
    (2, 2.0, 3.528_340_286_156_377_3e-1),
    (2, 3.7, 4.283_296_562_065_758_7e-1),
    (2, 5.0, 4.656_511_627_775_221_4e-2),
    (2, 7.5, -2.302_734_105_257_902_6e-1),
    (2, 10.0, 2.546_303_136_851_206e-1),
    (2, 12.0, -8.493_049_487_860_481e-2),
    (2, 15.0, 4.157_167_797_525_047e-2),
    (2, 20.0, -1.603_413_519_229_981_4e-1),
    (2, 25.0, -1.062_948_032_423_813e-1),
    (2, 29.5, 1.287_882_394_442_157e-1),
    (3, 0.001, 2.083_333_203_125_003_2e-11),
    (3, 0.1, 2.082_031_575_475_626_2e-5),
    (3, 0.5, 2.563_729_994_587_244e-3),
    (3, 1.0, 1.956_335_398_266_840_7e-2),
    (3, 2.0, 1.289_432_494_744_020_6e-1),
    (3, 3.7, 4.092_251_000_454_31e-1),
    (3, 5.0, 3.648_312_306_136_67e-1),
    (3, 7.5, -2.580_609_131_934_603e-1),
    (3, 10.0, 5.837_937_930_518_681_5e-2),
    (3, 12.0, 1.951_369_395_310_926_8e-1),
    (3, 15.0, -1.940_182_578_201_226_4e-1),
    (3, 20.0, -9.890_139_456_044_968e-2),
    (3, 25.0, 1.083_430_810_615_088_9e-1),
    (3, 29.5, 8.176_719_022_722_165e-2),
    (5, 0.001, 2.604_166_558_159_724e-19),
    (5, 0.1, 2.603_081_790_964_441e-9),
    (5, 0.5, 8.053_627_241_357_474e-6),
    (5, 1.0, 2.497_577_302_112_344_4e-4),
    (5, 2.0, 7.039_629_755_871_685e-3),
    (5, 3.7, 9.948_541_700_833_39e-2),
    (5, 5.0, 2.611_405_461_201_700_7e-1),
    (5, 7.5, 2.834_739_051_625_504_4e-1),
    (5, 10.0, -2.340_615_281_867_936_3e-1),
    (5, 12.0, -7.347_096_310_165_858e-2),
    (5, 15.0, 1.304_561_345_650_295_5e-1),
    (5, 20.0, 1.511_697_679_823_949_8e-1),
    (5, 25.0, -6.600_799_539_842_299e-2),
    (5, 29.5, -1.121_828_172_055_936_7e-1),
    (8, 0.001, 9.688_119_770_568_098e-32),
    (8, 0.1, 9.685_429_231_594_647e-16),
    (8, 0.5, 3.758_223_154_797_61e-10),
    (8, 1.0, 9.422_344_172_604_5e-8),
    (8, 2.0, 2.217_955_228_792_590_5e-5),
    (8, 3.7, 2.308_906_794_383_349_4e-3),
    (8, 5.0, 1.840_521_665_480_2e-2),
    (8, 7.5, 1.744_078_904_958_313e-1),
    (8, 10.0, 3.178_541_268_438_572e-1),
    (8, 12.0, 4.509_532_908_045_724e-2),
    (8, 15.0, -1.739_836_590_889_573_5e-1),
    (8, 20.0, -7.386_892_884_075_034e-2),
    (8, 25.0, 1.530_061_666_573_989e-1),
    (8, 29.5, -6.579_688_113_901_931_5e-3),
    (13, 0.001, 1.960_332_464_606_076_3e-53),
    (13, 0.1, 1.959_982_469_407_178e-27),
    (13, 0.5, 2.382_323_271_215_503_7e-18),
    (13, 1.0, 1.925_616_764_480_173e-14),
    (13, 2.0, 1.494_942_010_153_115_9e-10),
    (13, 3.7, 3.731_636_955_679_691e-7),
    (13, 5.0, 1.520_758_220_584_945_4e-5),
    (13, 7.5, 1.644_017_116_656_646_2e-3),
    (13, 10.0, 2.897_208_392_677_676_6e-2),
    (13, 12.0, 1.201_478_829_267e-1),
    (13, 15.0, 2.787_148_734_373_273e-1),
    (13, 20.0, -2.041_450_525_484_298e-1),
    (13, 25.0, 9.828_287_584_358_864e-2),
    (13, 29.5, 3.167_741_734_944_099e-2),
    (20, 0.001, 3.919_904_302_959_263_5e-85),
    (20, 0.1, 3.919_437_720_858_617_5e-45),
    (20, 0.5, 3.727_201_961_704_714_5e-31),
    (20, 1.0, 3.873_503_008_524_657_6e-25),
    (20, 2.0, 3.918_972_805_090_754e-19),
    (20, 3.7, 7.696_009_826_743_039e-14),
    (20, 5.0, 2.770_330_052_128_941_6e-11),
    (20, 7.5, 6.296_090_828_476_52e-8),
    (20, 10.0, 1.151_336_924_781_339_8e-5),
    (20, 12.0, 2.512_132_702_453_995_4e-4),
    (20, 15.0, 7.360_234_079_223_486e-3),
    (20, 20.0, 1.647_477_737_753_265_4e-1),
    (20, 25.0, 5.199_404_922_830_323e-2),
    (20, 29.5, -5.744_441_587_371_955_4e-2),
    (30, 0.001, 3.511_074_556_422_214_7e-132),
    (30, 0.1, 3.510_791_444_621_457e-72),
    (30, 0.5, 3.263_356_828_913_978e-51),
    (30, 1.0, 3.482_869_794_251_483e-42),
    (30, 2.0, 3.650_256_266_474_097_4e-33),
    (30, 3.7, 3.495_112_685_201_515_5e-25),
    (30, 5.0, 2.671_177_278_250_799e-21),
    (30, 7.5, 3.970_513_949_272_091e-16),
    (30, 10.0, 1.551_096_078_257_467e-12),
    (30, 12.0, 2.552_259_043_034_417e-10),
    (30, 15.0, 1.037_471_020_107_871_8e-7),
    (30, 20.0, 1.240_153_636_035_432_7e-4),
    (30, 25.0, 1.180_902_612_426_901_5e-2),
    (30, 29.5, 1.231_520_470_643_907_3e-1),
    (45, 0.001, 2.375_955_660_269_801e-205),
    (45, 0.1, 2.375_826_548_591_083e-115),
    (45, 0.5, 6.743_703_176_023_217e-84),
    (45, 1.0, 2.363_077_153_624_463e-70),
    (45, 2.0, 8.179_839_263_716_029e-57),
    (45, 3.7, 8.176_695_684_407_741e-45),
    (45, 5.0, 5.893_801_603_278_735e-39),
    (45, 7.5, 4.172_468_219_983_882e-31),
    (45, 10.0, 1.375_381_039_495_854_8e-25),
    (45, 12.0, 3.946_558_989_987_071e-22),
    (45, 15.0, 5.777_281_030_077_064e-18),
    (45, 20.0, 9.011_446_287_541_265e-13),
    (45, 25.0, 5.608_399_049_233_054e-9),
    (45, 29.5, 2.206_427_563_743_809_6e-6),
    (64, 0.001, 4.272_316_107_095_978e-301),
    (64, 0.1, 4.272_151_806_789_138e-173),
    (64, 0.5, 2.313_801_316_194_194e-128),
    (64, 1.0, 4.255_915_220_948_966e-109),
    (64, 2.0, 7.760_699_545_983_659e-90),
    (64, 3.7, 9.390_685_899_253_791e-73),
    (64, 5.0, 2.103_556_084_685_751e-64),
    (64, 7.5, 3.471_136_031_233_680_5e-53),
    (64, 10.0, 2.904_936_028_729_109_4e-45),
    (64, 12.0, 2.862_267_868_006_224e-40),
    (64, 15.0, 3.327_857_998_599_669e-34),
    (64, 20.0, 1.661_121_515_206_5e-26),
    (64, 25.0, 1.083_577_140_530_065e-20),
    (64, 29.5, 1.607_193_362_677_099_3e-16),
];
pub const J_LARGE: &[(usize, f64, f64)] = &[
    (0, 40.0, 7.366_890_584_237_29e-3),
    (0, 60.0, -9.147_180_408_906_187e-2),
    (0, 100.0, 1.998_585_030_422_312_2e-2),
    (1, 40.0, 1.260_383_180_375_85e-1),
    (1, 60.0, 4.659_838_375_816_631_5e-2),
    (1, 100.0, -7.714_535_201_411_216e-2),
    (2, 40.0, -1.064_974_682_358_039_6e-3),
    (2, 60.0, 9.302_508_354_766_742e-2),
    (2, 100.0, -2.152_875_734_450_536_4e-2),
    (3, 40.0, -1.261_448_155_058_208e-1),
    (3, 60.0, -4.039_671_152_165_516e-2),
    (3, 100.0, 7.628_420_172_033_194e-2),
    (5, 40.0, 1.225_734_659_771_177_8e-1),
    (5, 60.0, 2.745_474_422_834_41e-2),
    (5, 100.0, -7.419_573_696_451_393e-2),
    (8, 40.0, -8.630_831_524_531_733e-2),
    (8, 60.0, -1.033_034_269_389_579_2e-1),
    (8, 100.0, 4.334_955_988_238_646e-2),
    (13, 40.0, -6.237_837_342_418_682e-2),
    (13, 60.0, -8.393_822_925_995_784e-2),
    (13, 100.0, -3.639_367_434_062_336e-2),
    (20, 40.0, 1.277_939_335_508_489e-1),
    (20, 60.0, 1.026_602_055_787_632_9e-1),
    (20, 100.0, 6.221_745_849_833_875_5e-2),
    (30, 40.0, -1.040_859_497_656_497_2e-1),
    (30, 60.0, 6.819_856_782_673_352e-2),
    (30, 100.0, 8.146_012_958_117_223e-2),
    (45, 40.0, 1.620_877_349_939_451e-2),
    (45, 60.0, 1.261_161_622_806_828_4e-1),
    (45, 100.0, 3.564_381_581_559_715_5e-2),
    (64, 40.0, 2.222_253_098_740_341_2e-9),
    (64, 60.0, 3.041_824_040_981_181_6e-2),
    (64, 100.0, 3.998_506_945_291_834e-2),
];
pub const HANKEL: &[(f64, f64, f64, f64, f64)] = &[
    (0.001, 9.999_997_500_000_156e-1, -4.471_416_611_375_923, 4.999_999_375_000_026e-4, -6.366_221_672_311_394e2),
    (0.01, 9.999_750_001_562_495e-1, -3.005_455_637_083_646, 4.999_937_500_260_416e-3, -6.367_859_628_206_066e1),
    (0.1, 9.975_015_620_660_4e-1, -1.534_238_651_350_366_7, 4.993_752_603_624_2e-2, -6.458_951_094_702_026_6),
    (0.5, 9.384_698_072_408_129e-1, -4.445_187_335_067_065_6e-1, 2.422_684_576_748_739e-1, -1.471_472_392_670_243),
    (1.0, 7.651_976_865_579_666e-1, 8.825_696_421_567_696e-2, 4.400_505_857_449_335e-1, -7.812_128_213_002_887e-1),
    (2.0, 2.238_907_791_412_356_7e-1, 5.103_756_726_497_451e-1, 5.767_248_077_568_734e-1, -1.070_324_315_409_375_4e-1),
    (3.3, -3.442_962_603_988_846e-1, 2.690_919_950_545_338e-1, 2.206_634_529_852_411e-1, 3.878_529_310_237_099_3e-1),
    (5.0, -1.775_967_713_143_383e-1, -3.085_176_252_490_337_6e-1, -3.275_791_375_914_652_3e-1, 1.478_631_433_912_268_3e-1),
    (8.0, 1.716_508_071_375_539e-1, 2.235_214_893_875_662_2e-1, 2.346_363_468_539_146_3e-1, -1.580_604_617_312_475e-1),
    (11.9, 2.504_944_169_958_956_2e-2, -2.298_332_139_433_750_8e-1, -2.289_832_496_619_240_7e-1, -3.471_149_833_403_052_6e-2),
    (12.0, 4.768_931_079_683_353_5e-2, -2.252_373_126_343_614_5e-1, -2.234_471_044_906_276e-1, -5.709_921_826_089_652e-2),
    (12.1, 6.966_677_360_680_738e-2, -2.184_383_805_509_254_6e-1, -2.157_489_733_769_247_8e-1, -7.873_693_145_139_582e-2),
    (15.0, -1.422_447_282_678_077_2e-2, 2.054_642_960_389_182_8e-1, 2.051_040_386_135_227_5e-1, 2.107_362_803_687_351e-2),
    (25.0, 9.626_678_327_595_811e-2, -1.272_494_322_680_061_4e-1, -1.253_502_495_802_899e-1, -9.882_996_478_323_741e-2),
    (50.0, 5.581_232_766_925_181_6e-2, -9.806_499_547_007_708e-2, -9.751_182_812_517_514e-2, -5.679_566_856_201_477e-2),
    (100.0, 1.998_585_030_422_312_2e-2, -7.724_431_336_508_315e-2, -7.714_535_201_411_216e-2, -2.037_231_200_275_979_2e-2),
    (300.0, -3.329_855_487_630_567e-2, -3.183_188_973_000_34e-2, -3.188_743_137_749_995e-2, 3.324_554_812_131_022e-2),
];
