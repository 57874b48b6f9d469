# one-off generator for the quote fixture CSVs (run once, then deleted;
# the shipped CSVs are pinned by a checksum test)
import os

HERE = os.path.join(os.path.dirname(__file__), "src", "multitenor", "data")
os.makedirs(HERE, exist_ok=True)

MATS = [0.5, 1, 2, 3, 4, 5, 6, 8, 9, 10]

# per date: rows of (T, irs_bid, irs_ask, ois_bid, ois_ask, b13_bid, b13_ask, b36_bid, b36_ask)
SWAP = {
    "2013-01-01": [
        ("0.5", "0.50825", "0.50825", "0.13", "0.17", "9.6", "9.6", "19.32", "21.32"),
        ("1", "0.311", "0.331", "0.125", "0.165", "8.29", "9", "16.25", "18.25"),
        ("2", "0.37", "0.395", "0.125", "0.165", "7.8", "9.8", "13.56", "15.56"),
        ("3", "0.5", "0.5", "0.12", "0.16", "7.21", "9.21", "11.7", "13.7"),
        ("4", "0.657", "0.667", "0.12", "0.16", "7.7", "7.7", "10.64", "12.64"),
        ("5", "0.83", "0.87", "0.109", "0.16", "7.3", "7.3", "9.74", "11.74"),
        ("6", "1.0862", "1.0978", "0.13", "0.17", "6.8", "6.8", "10.2", "10.2"),
        ("8", "1.5001", "1.5149", "0.226", "0.276", "6", "6", "9.7", "9.7"),
        ("9", "1.6496", "1.6684", "0.368", "0.418", "5.7", "5.7", "9.7", "9.7"),
        ("10", "1.836", "1.837", "0.563", "0.613", "5.3", "5.3", "8.67", "10.67"),
    ],
    "2014-09-08": [
        ("0.5", "0.3263", "0.3263", "0.091", "0.096", "8.2", "8.2", "1.96875", "2.46875"),
        ("1", "0.337", "0.3395", "0.092", "0.097", "8.75", "9.25", "2.09375", "2.21875"),
        ("2", "0.7191", "0.7231", "0.094", "0.099", "9.625", "10.125", "2.125", "2.25"),
        ("3", "1.157", "1.161", "0.098", "0.103", "10.25", "10.75", "2.125", "2.25"),
        ("4", "1.5234", "1.5274", "0.126", "0.131", "10.75", "11.25", "2.15625", "2.28125"),
        ("5", "1.8", "1.8038", "0.184", "0.189", "11", "11.5", "2.15625", "2.28125"),
        ("6", "2.0166", "2.0206", "0.345", "0.355", "10.875", "11.375", "2.15625", "2.28125"),
        ("8", "2.3348", "2.3388", "0.949", "0.989", "10.125", "10.625", "2.15625", "2.28125"),
        ("9", "2.4551", "2.4591", "1.296", "1.346", "9.625", "10.125", "2.15625", "2.28125"),
        ("10", "2.559", "2.563", "1.562", "1.602", "9.125", "9.625", "2.15625", "2.28125"),
    ],
    "2015-06-18": [
        ("0.5", "0.4434", "0.4434", "0.136", "0.146", "9.1", "9.1", "2.375", "2.875"),
        ("1", "0.51", "0.511", "0.159", "0.164", "10", "10.5", "2.19675", "2.19675"),
        ("2", "0.896", "0.898", "0.175", "0.18", "11.75", "12.25", "1.9375", "2.05625"),
        ("3", "1.2354", "1.2404", "0.189", "0.194", "13", "13.5", "1.84375", "1.96875"),
        ("4", "1.5103", "1.5153", "0.255", "0.26", "13.625", "14.125", "1.78125", "1.90625"),
        ("5", "1.698", "1.757", "0.333", "0.338", "13.875", "14.375", "1.78125", "1.90625"),
        ("6", "1.918", "1.922", "0.541", "0.581", "13.75", "14.25", "1.75", "1.875"),
        ("8", "2.1877", "2.1917", "0.991", "1.041", "13.035", "14.035", "1.8125", "1.9375"),
        ("9", "2.2857", "2.288", "1.255", "1.305", "13", "13.5", "1.84375", "1.96875"),
        ("10", "2.3665", "2.369", "1.478", "1.518", "12.75", "13.25", "1.90625", "2.03125"),
    ],
    "2016-04-20": [
        ("0.5", "0.90415", "0.90415", "0.379", "0.385", "17.3", "17.875", "4.96875", "5.96875"),
        ("1", "0.7705", "0.774", "0.395", "0.402", "15.75", "17.232", "5.35", "5.625"),
        ("2", "0.8935", "0.8975", "0.4055", "0.4125", "15", "14.4", "4.725", "5.1"),
        ("3", "1.0005", "1.0054", "0.419", "0.42", "14.625", "13.875", "4.4", "4.65"),
        ("4", "1.1075", "1.1095", "0.452", "0.459", "13.111", "13.623", "4.075", "4.325"),
        ("5", "1.208", "1.21", "0.485", "0.492", "12.245", "13.237", "3.825", "4.075"),
        ("6", "1.3097", "1.312", "0.54", "0.548", "12.2", "12.755", "3.825", "3.825"),
        ("8", "1.4895", "1.4895", "0.685", "0.695", "10.063", "11.337", "3.7", "3.7"),
        ("9", "1.5655", "1.5675", "0.7838", "0.7938", "9.665", "10.904", "3.575", "3.825"),
        ("10", "1.634", "1.636", "0.863", "0.903", "9.359", "10.625", "3.625", "3.85"),
    ],
    "2017-03-22": [
        ("0.5", "1.43128", "1.43128", "0.9809", "0.989", "13.7091", "16.4909", "19.5232", "20.2268"),
        ("1", "1.385", "1.39", "1.1165", "1.1165", "14.016", "15.184", "17.4461", "18.6439"),
        ("2", "1.6098", "1.6188", "1.3335", "1.3335", "13.6717", "15.0783", "15.4479", "16.752"),
        ("3", "1.795", "1.7962", "1.494", "1.504", "11.7628", "15.4372", "13.9918", "15.4082"),
        ("4", "1.9304", "1.9354", "1.601", "1.649", "11.4041", "14.0959", "13.785", "14.365"),
        ("5", "2.038", "2.0401", "1.718", "1.728", "11.6383", "12.3617", "13.6495", "14.1505"),
        ("6", "2.1249", "2.1299", "1.796", "1.804", "10.7223", "11.7777", "13.4117", "14.3383"),
        ("8", "2.2614", "2.2664", "1.914", "1.924", "10.1162", "10.7838", "13.4088", "14.2912"),
        ("9", "2.3159", "2.3209", "0.9809", "0.989", "9.7987", "10.5013", "14.0925", "14.3075"),
        ("10", "2.3671", "2.368", "1.987", "2.037", "9.5421", "10.258", "13.6338", "14.6062"),
    ],
    "2017-10-31": [
        ("0.5", "1.57511", "1.57511", "1.3455", "1.3555", "2.5057", "5.9943", "9.5544", "10.1956"),
        ("1", "1.6286", "1.6316", "1.4655", "1.4715", "6.2566", "6.7434", "10.127", "11.0731"),
        ("2", "1.8071", "1.8121", "1.59", "1.63", "7.127", "8.873", "10.8631", "11.3869"),
        ("3", "1.9235", "1.9284", "1.699", "1.709", "8.1502", "8.8498", "11.2344", "12.0156"),
        ("4", "2.0095", "2.0115", "1.749", "1.799", "8.1319", "9.1181", "11.4939", "12.3061"),
        ("5", "2.0815", "2.0832", "1.827", "1.837", "8.2078", "9.0422", "11.8685", "12.8315"),
        ("6", "2.1469", "2.1488", "1.862", "1.912", "7.8617", "8.8383", "12.1997", "13.1753"),
        ("8", "2.261", "2.264", "1.961", "2.011", "7.2408", "8.0593", "13.1587", "13.8513"),
        ("9", "2.3086", "2.3103", "1.3455", "2.042", "7.3706", "7.8294", "13.5685", "14.3315"),
        ("10", "2.3519", "2.3533", "2.035", "2.085", "6.8616", "7.8384", "13.4028", "14.7973"),
    ],
}

CDS_MATS = ["0.5", "1", "2", "3", "4", "5", "7", "10"]

CDS = {
    "2013-01-01": ("%", {
        "BACORP": "0.04948 0.06922 0.13891 0.22322 0.27845 0.32756 0.37376 0.41302",
        "MUFJ-BTMUFJ": "0.06353 0.07170 0.10938 0.14172 0.18472 0.22588 0.27046 0.30236",
        "BACR-Bank": "0.04903 0.05996 0.12029 0.18846 0.25487 0.32914 0.38240 0.41731",
        "C": "0.05000 0.07509 0.13787 0.21259 0.27657 0.32116 0.36793 0.41046",
        "ACAFP": "0.03341 0.05218 0.13774 0.22943 0.31452 0.39119 0.44453 0.48030",
        "CSGAG": "0.02276 0.02462 0.05648 0.11484 0.17199 0.22845 0.27654 0.31271",
        "DB": "0.02084 0.02521 0.06536 0.12177 0.18313 0.24353 0.29449 0.32557",
        "HSBC": "0.05374 0.06313 0.09683 0.12872 0.16578 0.20440 0.23195 0.25383",
        "JPM": "0.04090 0.04977 0.09009 0.14186 0.18265 0.22204 0.25815 0.29288",
        "SOCGEN": "0.05892 0.08162 0.17974 0.27959 0.35927 0.44248 0.49035 0.52445",
        "SUMIBK-Bank": "0.07395 0.09135 0.12479 0.16631 0.20062 0.23445 0.28110 0.31914",
        "NORBK": "0.04795 0.06673 0.09658 0.12932 0.16512 0.19870 0.23620 0.26255",
        "RBOS-RBOSplc": "0.02482 0.04344 0.12412 0.22640 0.31477 0.39681 0.45233 0.49291",
        "UBS": "0.02381 0.02630 0.06334 0.11498 0.17802 0.23502 0.28481 0.31691",
    }),
    "2014-09-08": ("dec", {
        "BACORP": "0.000739 0.000895 0.001260 0.001607 0.002029 0.002402 0.002998 0.003592",
        "MUFJ-BTMUFJ": "0.000360 0.000464 0.000680 0.000945 0.001286 0.001630 0.002037 0.002269",
        "BACR-Bank": "0.000443 0.000576 0.000897 0.001264 0.001663 0.002062 0.002642 0.002999",
        "C": "0.000666 0.000905 0.001279 0.001646 0.002090 0.002436 0.003051 0.003526",
        "ACAFP": "0.000317 0.000402 0.000639 0.000874 0.001138 0.001410 0.001896 0.002195",
        "CSGAG": "0.000302 0.000399 0.000608 0.000831 0.001046 0.001258 0.001631 0.002010",
        "DB": "0.000374 0.000579 0.000944 0.001287 0.001714 0.002082 0.002667 0.003048",
        "HSBC": "0.000498 0.000599 0.000892 0.001190 0.001534 0.001847 0.002381 0.002747",
        "JPM": "0.000480 0.000806 0.001095 0.001336 0.001655 0.001988 0.002537 0.003060",
        "SOCGEN": "0.000287 0.000458 0.000894 0.001327 0.001798 0.002215 0.002864 0.003296",
        "SUMIBK-Bank": "0.000381 0.000472 0.000694 0.000943 0.001279 0.001624 0.001992 0.002272",
        "NORBK": "0.000348 0.000442 0.000635 0.000855 0.001160 0.001453 0.001787 0.002028",
        "RBOS-RBOSplc": "0.000819 0.001055 0.001550 0.002062 0.002557 0.003061 0.003851 0.004245",
        "UBS": "0.000248 0.000329 0.000590 0.000847 0.001148 0.001425 0.001959 0.002341",
    }),
    "2015-06-18": ("%", {
        "BACORP": "0.04813 0.06260 0.08497 0.11369 0.14062 0.17582 0.23483 0.27894",
        "MUFJ-BTMUFJ": "0.03513 0.04003 0.05647 0.07192 0.09724 0.12071 0.15429 0.17695",
        "BACR-Bank": "0.10031 0.11363 0.13322 0.15291 0.17759 0.20189 0.24070 0.26574",
        "C": "0.05332 0.07192 0.09909 0.13358 0.16440 0.20218 0.25854 0.30506",
        "ACAFP": "0.10370 0.11174 0.13671 0.16195 0.18846 0.21685 0.25641 0.28629",
        "CSGAG": "0.11119 0.12543 0.14612 0.16801 0.18889 0.21226 0.24583 0.27880",
        "DB": "0.12448 0.14204 0.16512 0.18943 0.21609 0.24378 0.28444 0.31339",
        "HSBC": "0.08689 0.09758 0.11594 0.13616 0.16099 0.18521 0.22451 0.26311",
        "JPM": "0.04570 0.06190 0.08312 0.10283 0.13030 0.16602 0.21851 0.26588",
        "RY": "0.04640 0.06612 0.08624 0.09515 0.12247 0.14505 0.18275 0.21404",
        "SOCGEN": "0.10419 0.11758 0.14766 0.17816 0.20979 0.24109 0.28484 0.31386",
        "SUMIBK-Bank": "0.02772 0.03362 0.04944 0.06761 0.09643 0.12386 0.16048 0.18282",
        "NORBK": "0.02549 0.03455 0.04727 0.06671 0.08839 0.12041 0.15002 0.18693",
        "RBOS-RBOSplc": "0.10865 0.12172 0.14396 0.16540 0.19014 0.21605 0.25592 0.28547",
        "UBS": "0.08423 0.09542 0.11551 0.13517 0.15375 0.17305 0.20454 0.23801",
    }),
    "2016-04-20": ("%", {
        "BACORP": "0.06923 0.09045 0.11964 0.14343 0.17157 0.21044 0.26665 0.30669",
        "MUFJ-BTMUFJ": "0.04612 0.05479 0.08152 0.10809 0.14762 0.18391 0.21351 0.23720",
        "BACR-Bank": "0.14546 0.16644 0.19214 0.21354 0.24068 0.26680 0.31066 0.33777",
        "C": "0.06438 0.09030 0.12128 0.14588 0.17473 0.21120 0.26621 0.30696",
        "ACAFP": "0.05232 0.06163 0.08805 0.11431 0.14472 0.17637 0.22025 0.24761",
        "CSGAG": "0.20990 0.22439 0.24518 0.26489 0.29034 0.31339 0.35276 0.38414",
        "DB": "0.24014 0.28283 0.31705 0.34429 0.36361 0.38440 0.41072 0.42937",
        "HSBC": "0.12261 0.13272 0.15764 0.18317 0.20849 0.23459 0.27675 0.30796",
        "JPM": "0.05800 0.07182 0.09415 0.10954 0.12903 0.16619 0.21402 0.26331",
        "RY": "0.05722 0.06608 0.08607 0.10522 0.12680 0.14766 0.18556 0.21962",
        "COOERAB": "0.10539 0.13421 0.16112 0.18228 0.22540 0.25207 0.28264 0.30758",
        "SOCGEN": "0.05087 0.06263 0.09305 0.12067 0.15037 0.18207 0.22809 0.25887",
        "SUMIBK-Bank": "0.05089 0.05631 0.08055 0.11043 0.15166 0.19291 0.22353 0.25009",
        "NORBK": "0.03872 0.04881 0.07293 0.09713 0.13045 0.15755 0.18881 0.21476",
        "RBOS-RBOSplc": "0.16161 0.18295 0.20569 0.22655 0.25696 0.28531 0.33445 0.34308",
        "UBS": "0.06047 0.07226 0.09013 0.10946 0.13127 0.15226 0.18996 0.22196",
    }),
    "2017-03-22": ("%", {
        "BACORP": "0.07252 0.11828 0.14502 0.17841 0.20794 0.25230 0.30848 0.36520",
        "MUFJ-BTMUFJ": "0.05547 0.06740 0.08868 0.10900 0.14743 0.18566 0.21703 0.23960",
        "BACR-Bank": "0.06269 0.08022 0.13055 0.18031 0.22667 0.26994 0.32310 0.35594",
        "C": "0.07404 0.10033 0.13763 0.17862 0.22290 0.26959 0.33201 0.39175",
        "ACAFP": "0.16709 0.18774 0.25196 0.32503 0.38096 0.44389 0.51201 0.55655",
        "CSGAG": "0.13103 0.15823 0.20877 0.25801 0.30053 0.34177 0.40034 0.43667",
        "DB": "0.18094 0.20880 0.31204 0.42938 0.54998 0.64002 0.70736 0.74787",
        "HSBC": "0.11167 0.12932 0.19583 0.25457 0.31632 0.37958 0.45059 0.50503",
        "JPM": "0.06314 0.09585 0.12173 0.14363 0.17416 0.20975 0.27020 0.33598",
        "COOERAB": "0.12140 0.14572 0.20139 0.25495 0.30128 0.34992 0.40392 0.43743",
        "RY": "0.05537 0.07156 0.07753 0.10519 0.15142 0.18154 0.24223 0.28360",
        "SOCGEN": "0.20716 0.24002 0.32344 0.39096 0.46318 0.53272 0.59547 0.63315",
        "SUMIBK-Bank": "0.05614 0.07030 0.09399 0.11720 0.15934 0.20025 0.23365 0.25986",
        "NORBK": "0.03408 0.04891 0.07764 0.10794 0.14182 0.17389 0.20219 0.23017",
        "RBOS-RBOSplc": "0.17319 0.20029 0.26063 0.32684 0.39763 0.45950 0.51386 0.54946",
        "UBS": "0.13648 0.15646 0.20061 0.26107 0.30586 0.35330 0.40325 0.44214",
    }),
    "2017-10-31": ("%", {
        "BACORP": "0.04765 0.07869 0.10314 0.12627 0.15811 0.19605 0.25590 0.31003",
        "MUFJ-BTMUFJ": "0.04112 0.05484 0.07999 0.10463 0.13901 0.17205 0.20889 0.23103",
        "BACR-Bank": "0.06283 0.07470 0.10530 0.13799 0.17674 0.20894 0.24773 0.27961",
        "C": "0.05522 0.08068 0.10889 0.14458 0.17606 0.21353 0.28439 0.33442",
        "ACAFP": "0.04400 0.05628 0.09576 0.13468 0.17967 0.22376 0.29454 0.34602",
        "CSGAG": "0.04169 0.04965 0.07940 0.10701 0.13990 0.17717 0.23487 0.27539",
        "DB": "0.07469 0.09145 0.16837 0.24921 0.31997 0.39129 0.49154 0.56485",
        "HSBC": "0.05794 0.05791 0.09311 0.14675 0.18578 0.23833 0.29412 0.34312",
        "JPM": "0.04781 0.07509 0.09724 0.11621 0.14779 0.17934 0.23899 0.29312",
        "LBGP": "0.14239 0.11944 0.16880 0.22706 0.28200 0.33578 0.41119 0.45180",
        "COOERAB": "0.03703 0.04606 0.07299 0.10144 0.13410 0.16635 0.22954 0.26655",
        "RY": "0.03909 0.04316 0.04805 0.05553 0.09077 0.11238 0.16119 0.19930",
        "SOCGEN": "0.06425 0.07306 0.12102 0.16241 0.20321 0.24923 0.32346 0.38950",
        "SUMIBK-Bank": "0.02385 0.02955 0.04556 0.06148 0.08704 0.11248 0.13883 0.15339",
        "NORBK": "0.03292 0.04668 0.07367 0.10251 0.13718 0.16995 0.20108 0.23021",
        "RBOS-RBOSplc": "0.05447 0.05456 0.08235 0.11239 0.15152 0.18195 0.20423 0.22949",
        "UBS": "0.03736 0.03339 0.05482 0.07795 0.10928 0.13908 0.18696 0.22032",
    }),
}

# per-bank one-factor credit coefficients and their panel average, 2013-01-01
# rows: loading then shift knots 1..8 (buckets ending 0.5,1,2,3,4,5,7,10)
CDS_COEFF_2013 = {
    "banks": ["BACORP", "MUFJ-BTMUFJ", "BACR-Bank", "C", "ACAFP", "CSGAG", "DB",
              "HSBC", "JPM", "SOCGEN", "SUMIBK-Bank", "NORBK", "RBOS-RBOSplc", "UBS"],
    "loading": "0.001279 0.002276 0.001897 0.000931 0.001208 0.000939 0.000342 0.002265 0.000793 0.001322 0.000408 0.000962 0.000146 0.000038",
    "loading_avg": "0.001058",
    "shift": [
        ("1", "0.000451 0.000394 0.000264 0.000561 0.000204 0.000105 0.000248 0.000235 0.000450 0.000596 0.001114 0.000518 0.000371 0.000385", "0.000421"),
        ("2", "0.000785 0.000539 0.000453 0.000984 0.000522 0.000140 0.000322 0.000399 0.000601 0.000980 0.001407 0.000835 0.000682 0.000428", "0.000648"),
        ("3", "0.001971 0.001188 0.001480 0.002050 0.001969 0.000678 0.000996 0.000981 0.001281 0.002649 0.001977 0.001345 0.002040 0.001048", "0.001547"),
        ("4", "0.003457 0.001764 0.002678 0.003368 0.003582 0.001676 0.001960 0.001544 0.002183 0.004439 0.002710 0.001918 0.003829 0.001930", "0.002646"),
        ("5", "0.004546 0.002563 0.003943 0.004610 0.005246 0.002705 0.003067 0.002228 0.002931 0.006065 0.003364 0.002576 0.005546 0.003061", "0.003746"),
        ("6", "0.005693 0.003408 0.005556 0.005658 0.007040 0.003827 0.004279 0.003001 0.003742 0.008115 0.004086 0.003254 0.007450 0.004198", "0.004951"),
        ("7", "0.007552 0.004706 0.007616 0.007490 0.009562 0.005215 0.005792 0.003832 0.004823 0.010932 0.005461 0.004285 0.010078 0.005644", "0.006642"),
        ("8", "0.012454 0.007033 0.012547 0.012391 0.016908 0.007800 0.008486 0.005320 0.007071 0.020564 0.008195 0.005961 0.018186 0.008216", "0.010795"),
    ],
}


def write_swap_files():
    for date, rows in SWAP.items():
        lines = ["maturity,bid,ask,kind,unit,entity"]
        for (T, ib, ia, ob, oa, b13b, b13a, b36b, b36a) in rows:
            lines.append(f"{T},{ib},{ia},IRS,%,")
            lines.append(f"{T},{ob},{oa},OIS,%,")
            lines.append(f"{T},{b13b},{b13a},BASIS_1m3m,bp,")
            lines.append(f"{T},{b36b},{b36a},BASIS_3m6m,bp,")
        with open(os.path.join(HERE, f"quotes_{date}.csv"), "w") as fh:
            fh.write("\n".join(lines) + "\n")


def write_cds_files():
    for date, (unit, banks) in CDS.items():
        lines = ["maturity,bid,ask,kind,unit,entity"]
        for bank, row in banks.items():
            vals = row.split()
            assert len(vals) == 8, (date, bank)
            for T, v in zip(CDS_MATS, vals):
                lines.append(f"{T},{v},{v},CDS,{unit},{bank}")
        with open(os.path.join(HERE, f"cds_{date}.csv"), "w") as fh:
            fh.write("\n".join(lines) + "\n")


def write_coeff_file():
    banks = CDS_COEFF_2013["banks"]
    lines = ["row,knot," + ",".join(banks) + ",average"]
    lines.append("loading,," + ",".join(CDS_COEFF_2013["loading"].split()) + "," + CDS_COEFF_2013["loading_avg"])
    for knot, vals, avg in CDS_COEFF_2013["shift"]:
        lines.append(f"shift,{knot}," + ",".join(vals.split()) + f",{avg}")
    with open(os.path.join(HERE, "cds_coeffs_1f_2013-01-01.csv"), "w") as fh:
        fh.write("\n".join(lines) + "\n")


write_swap_files()
write_cds_files()
write_coeff_file()
print("written to", HERE)
