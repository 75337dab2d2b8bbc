//! Appendix data for the degree 8, 12, 14 invariant polynomials, kept in
//! the printed grouping: each definition is a list of blocks, each block a
//! rational prefactor times a signed sum of products of atoms.

use super::{Atom, Block, Def};

/// `729 Θ(8) − 71757069294212`.
pub const K8_1: Def = &[Block {
    prefactor: "1",
    terms: &[("729", &[Atom::Theta(8)]), ("-71757069294212", &[])],
}];

/// The expanded degree-8 function, transcribed independently of `W1_8` so
/// that `K8_2 − W1_8` is a real cross-check.
pub const K8_2: Def = &[Block {
    prefactor: "1",
    terms: &[
        ("68580", &[Atom::Theta(8)]),
        ("-42672", &[Atom::Theta(6), Atom::Theta(2)]),
        ("-42672", &[Atom::Theta(5), Atom::Theta(3)]),
        ("-13335", &[Atom::Theta(4), Atom::Theta(4)]),
        ("13335", &[Atom::Theta(4), Atom::Theta(2), Atom::Theta(2)]),
        ("17780", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(2)]),
        ("-939", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
        ("385526887200", &[]),
    ],
}];

pub const W1_8: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("68580", &[Atom::Theta(8)]),
            ("-42672", &[Atom::Theta(2), Atom::Theta(6)]),
            ("-42672", &[Atom::Theta(3), Atom::Theta(5)]),
            ("-13335", &[Atom::Theta(4), Atom::Theta(4)]),
            ("13335", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(4)]),
            ("17780", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(3)]),
            ("-939", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
        ],
    },
];

pub const W2_8: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("76765890960", &[Atom::Theta(8)]),
            ("-47741514624", &[Atom::Theta(2), Atom::Theta(6)]),
            ("-47569228416", &[Atom::Theta(3), Atom::Theta(5)]),
            ("-14950629660", &[Atom::Theta(4), Atom::Theta(4)]),
            ("14921466630", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(4)]),
            ("19832476160", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(3)]),
            ("-1050561847", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
        ],
    },
];

pub const W1_12: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("302400", &[Atom::Theta(3), Atom::Theta(9)]),
            ("-56700", &[Atom::Theta(4), Atom::Theta(8)]),
            ("-51840", &[Atom::Theta(5), Atom::Theta(7)]),
            ("-158400", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(7)]),
            ("30240", &[Atom::Theta(6), Atom::Theta(6)]),
            ("-168000", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(6)]),
            ("33264", &[Atom::Theta(2), Atom::Theta(5), Atom::Theta(5)]),
            ("-80640", &[Atom::Theta(3), Atom::Theta(4), Atom::Theta(5)]),
            ("16275", &[Atom::Theta(4), Atom::Theta(4), Atom::Theta(4)]),
            ("92400", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(3), Atom::Theta(4)]),
            ("19600", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(3), Atom::Theta(3)]),
        ],
    },
];

pub const W2_12: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("42338419200", &[Atom::Theta(3), Atom::Theta(9)]),
            ("-7938453600", &[Atom::Theta(4), Atom::Theta(8)]),
            ("-250343238600", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(8)]),
            ("-7258014720", &[Atom::Theta(5), Atom::Theta(7)]),
            ("-22177267200", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(7)]),
            ("4233841920", &[Atom::Theta(6), Atom::Theta(6)]),
            ("-23521344000", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(6)]),
            ("156357159840", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(6)]),
            ("4657226112", &[Atom::Theta(2), Atom::Theta(5), Atom::Theta(5)]),
            ("-11290245120", &[Atom::Theta(3), Atom::Theta(4), Atom::Theta(5)]),
            ("160591001760", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(3), Atom::Theta(5)]),
            ("2278630200", &[Atom::Theta(4), Atom::Theta(4), Atom::Theta(4)]),
            ("48089818350", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(4), Atom::Theta(4)]),
            ("12936739200", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(3), Atom::Theta(4)]),
            ("-48806484300", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(4)]),
            ("2744156800", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(3), Atom::Theta(3)]),
            ("-66618900600", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(3), Atom::Theta(3)]),
            ("3440480295", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
        ],
    },
];

pub const W3_12: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1976486400", &[Atom::Theta(3), Atom::Theta(9)]),
            ("-370591200", &[Atom::Theta(4), Atom::Theta(8)]),
            ("63622800", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(8)]),
            ("-338826240", &[Atom::Theta(5), Atom::Theta(7)]),
            ("-1035302400", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(7)]),
            ("197648640", &[Atom::Theta(6), Atom::Theta(6)]),
            ("-1098048000", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(6)]),
            ("-12136320", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(6)]),
            ("217413504", &[Atom::Theta(2), Atom::Theta(5), Atom::Theta(5)]),
            ("-527063040", &[Atom::Theta(3), Atom::Theta(4), Atom::Theta(5)]),
            ("185512320", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(3), Atom::Theta(5)]),
            ("106373400", &[Atom::Theta(4), Atom::Theta(4), Atom::Theta(4)]),
            ("-39822300", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(4), Atom::Theta(4)]),
            ("603926400", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(3), Atom::Theta(4)]),
            ("6366150", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(4)]),
            ("128105600", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(3), Atom::Theta(3)]),
            ("-63571200", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(3), Atom::Theta(3)]),
            ("-274935", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
        ],
    },
];

pub const W4_12: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-1501985020838400", &[Atom::Theta(3), Atom::Theta(9)]),
            ("192772901311200", &[Atom::Theta(4), Atom::Theta(8)]),
            ("2407922770302000", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(8)]),
            ("-13295642434560", &[Atom::Theta(5), Atom::Theta(7)]),
            ("760428342950400", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(7)]),
            ("-156516673824000", &[Atom::Theta(6), Atom::Theta(6)]),
            ("33565287369600", &[Atom::Theta(2), Atom::Theta(4), Atom::Theta(6)]),
            ("883577458444800", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(6)]),
            ("-1515778400455200", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(6)]),
            ("-53070803904384", &[Atom::Theta(2), Atom::Theta(5), Atom::Theta(5)]),
            ("579544204861440", &[Atom::Theta(3), Atom::Theta(4), Atom::Theta(5)]),
            ("-1696086939738240", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(3), Atom::Theta(5)]),
            ("-47654628701400", &[Atom::Theta(4), Atom::Theta(4), Atom::Theta(4)]),
            ("-461057612469300", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(4), Atom::Theta(4)]),
            ("-463327486742400", &[Atom::Theta(2), Atom::Theta(3), Atom::Theta(3), Atom::Theta(4)]),
            ("472701971331450", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(4)]),
            ("-111245008649600", &[Atom::Theta(3), Atom::Theta(3), Atom::Theta(3), Atom::Theta(3)]),
            ("684206487048000", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(3), Atom::Theta(3)]),
            ("-33351005297925", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
        ],
    },
];

pub const W1_14: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("211680", &[Atom::Theta(9), Atom::Theta(5)]),
            ("26460", &[Atom::Theta(8), Atom::Theta(6)]),
            ("-43200", &[Atom::Theta(7), Atom::Theta(7)]),
            ("-29400", &[Atom::Theta(8), Atom::Theta(3), Atom::Theta(3)]),
            ("58800", &[Atom::Theta(7), Atom::Theta(4), Atom::Theta(3)]),
            ("-122304", &[Atom::Theta(6), Atom::Theta(5), Atom::Theta(3)]),
            ("-12495", &[Atom::Theta(6), Atom::Theta(4), Atom::Theta(4)]),
            ("-91728", &[Atom::Theta(5), Atom::Theta(5), Atom::Theta(4)]),
            ("27440", &[Atom::Theta(5), Atom::Theta(3), Atom::Theta(3), Atom::Theta(3)]),
            ("-9800", &[Atom::Theta(4), Atom::Theta(4), Atom::Theta(3), Atom::Theta(3)]),
        ],
    },
];

pub const Q12_INNER: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-105", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("341250", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("-443786280", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("288672359200", &[Atom::Theta(2), Atom::Theta(2)]),
            ("-93922348435072", &[Atom::Theta(2)]),
            ("12228055880335360", &[]),
        ],
    },
];

pub const Q14_INNER: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-3", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("11790", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("-19314252", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("16882085360", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("-8303952287424", &[Atom::Theta(2), Atom::Theta(2)]),
            ("2179380420445440", &[Atom::Theta(2)]),
            ("-238431403767424000", &[]),
        ],
    },
];

pub const K12_1: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1", &[Atom::W1_12]),
        ],
    },
    Block {
        prefactor: "105/1392517035128",
        terms: &[
            ("2327783", &[Atom::W2_8, Atom::Theta(2), Atom::Theta(2)]),
            ("1641651348800", &[Atom::W1_8, Atom::Theta(2), Atom::Theta(2)]),
            ("1853819288565353101504512", &[Atom::Theta(2), Atom::Theta(2)]),
            ("-5646385058438400", &[Atom::W1_8, Atom::Theta(2)]),
            ("-2457714965901036308812800000", &[Atom::Theta(2)]),
            ("1878213525838949376", &[Atom::W1_8]),
            ("474462162108792", &[Atom::K12Zero]),
            ("814849980464400425555898009600", &[]),
        ],
    },
];

pub const K12_2: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1", &[Atom::W1_12]),
        ],
    },
    Block {
        prefactor: "105/6580376",
        terms: &[
            ("11", &[Atom::W2_8, Atom::Theta(2), Atom::Theta(2)]),
            ("-13946970", &[Atom::W1_8, Atom::Theta(2), Atom::Theta(2)]),
            ("-717386789108493504", &[Atom::Theta(2), Atom::Theta(2)]),
            ("2185025300", &[Atom::W1_8, Atom::Theta(2)]),
            ("951080970408987600000", &[Atom::Theta(2)]),
            ("-726826815792", &[Atom::W1_8]),
            ("-315043889595739569446400", &[]),
        ],
    },
];

pub const K12_3: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-10742925608415/467309767", &[Atom::Q12]),
            ("6983349/10867669", &[Atom::K12(1)]),
            ("3884320/10867669", &[Atom::K12(2)]),
        ],
    },
];

pub const K12_4: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-2898884687985/487195289", &[Atom::Q12]),
            ("39572311/237932583", &[Atom::K12(1)]),
            ("198360272/237932583", &[Atom::K12(2)]),
        ],
    },
];

pub const K12_5: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-511567886115/1063875427", &[Atom::Q12]),
            ("2327783/173189023", &[Atom::K12(1)]),
            ("170861240/173189023", &[Atom::K12(2)]),
        ],
    },
];

pub const K12_6: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-2557839430575/69599327", &[Atom::Q12]),
            ("11638915/11330123", &[Atom::K12(1)]),
            ("-308792/11330123", &[Atom::K12(2)]),
        ],
    },
];

pub const K12_7: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-17904876014025/1362158257", &[Atom::Q12]),
            ("11638915/31678099", &[Atom::K12(1)]),
            ("20039184/31678099", &[Atom::K12(2)]),
        ],
    },
];

pub const K12_8: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-26924625585/9942761", &[Atom::Q12]),
            ("2327783/30753191", &[Atom::K12(1)]),
            ("28425408/30753191", &[Atom::K12(2)]),
        ],
    },
];

pub const K14_1: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1", &[Atom::W1_14]),
        ],
    },
    Block {
        prefactor: "1/409396489250473267200",
        terms: &[
            ("-50198389200", &[Atom::W2_12, Atom::Theta(2)]),
            ("1814183745255", &[Atom::W3_12, Atom::Theta(2)]),
            ("719963", &[Atom::W4_12, Atom::Theta(2)]),
            ("114941496614400", &[Atom::W2_12]),
            ("-2663797055081400", &[Atom::W3_12]),
            ("282784300728374808115200", &[Atom::W1_8, Atom::Theta(2)]),
            ("-63215721507749516817408000", &[Atom::W1_8]),
            ("-1088012169332650346400", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("4950455370463559076120000", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("-9655764190981762706790537600", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("10465560623426071788759214080000", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("-6807538538432150822570374332825600", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("2657394331038056352474406872078336000", &[Atom::Theta(2), Atom::Theta(2)]),
            ("-576387923771111244952245791209505280000", &[Atom::Theta(2)]),
            ("53583585232103605801009946012851814400000", &[]),
        ],
    },
];

pub const K14_2: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1", &[Atom::W1_14]),
        ],
    },
    Block {
        prefactor: "1/568635456614400",
        terms: &[
            ("1", &[Atom::W4_12, Atom::Theta(2)]),
            ("19504800", &[Atom::W2_12]),
            ("-10727283367475136000", &[Atom::W1_8]),
            ("47986596584438400", &[Atom::W1_8, Atom::Theta(2)]),
            ("16539581376126884275200", &[Atom::Theta(2), Atom::Theta(2), Atom::Theta(2)]),
            ("-33154342667599799842560000", &[Atom::Theta(2), Atom::Theta(2)]),
            ("22141768911037509306263040000", &[Atom::Theta(2)]),
            ("-4925899975161328995062246400000", &[]),
        ],
    },
];

pub const K14_3: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1", &[Atom::W1_14]),
        ],
    },
    Block {
        prefactor: "1/96046509070368460800",
        terms: &[
            ("1639053360", &[Atom::W2_12, Atom::Theta(2)]),
            ("-7819677495", &[Atom::W3_12, Atom::Theta(2)]),
            ("168907", &[Atom::W4_12, Atom::Theta(2)]),
            ("52014010923000", &[Atom::W3_12]),
            ("-2304112252773339559835020800000", &[Atom::Theta(2)]),
            ("1634892368046326720660996352000000", &[]),
        ],
    },
];

pub const K14_4: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-3518381271825/4968075880576", &[Atom::Q14]),
            ("341316459225/426944020987", &[Atom::K14(1)]),
            ("-522985910360/426944020987", &[Atom::K14(2)]),
            ("608613472122/426944020987", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_5: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1555746820875/12804209320064", &[Atom::Q14]),
            ("-150922243875/1100361738443", &[Atom::K14(1)]),
            ("8647219074000/7702532169101", &[Atom::K14(2)]),
            ("1668191078/114963166703", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_6: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-6486267514725/15677800418432", &[Atom::Q14]),
            ("629229662925/1347310973459", &[Atom::K14(1)]),
            ("-28104693257260/9431176814213", &[Atom::K14(2)]),
            ("33131262430998/9431176814213", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_7: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-674600188425/1456122839168", &[Atom::Q14]),
            ("588983731225/1126220008419", &[Atom::K14(1)]),
            ("-33746326745200/7883540058933", &[Atom::K14(2)]),
            ("186601893958/39221592333", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_8: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-6298570125/84286231424", &[Atom::Q14]),
            ("11609403375/137623612247", &[Atom::K14(1)]),
            ("-2012756994830/8670287571561", &[Atom::K14(2)]),
            ("9951652153766/8670287571561", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_9: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-15028681275/171940704256", &[Atom::Q14]),
            ("1457925075/14776154272", &[Atom::K14(1)]),
            ("-5220816525/6464567494", &[Atom::K14(2)]),
            ("2638218937/1543777312", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_10: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-9597761156475/31040670265216", &[Atom::Q14]),
            ("931074150675/2667557600917", &[Atom::K14(1)]),
            ("-53346689979600/18672903206419", &[Atom::K14(2)]),
            ("977642897482/278700047857", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_11: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-378166150305/424558809856", &[Atom::Q14]),
            ("36685714665/36485522722", &[Atom::K14(1)]),
            ("26114321216/383097988581", &[Atom::K14(2)]),
            ("-56432673235/766195977162", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_12: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("23430680865/381493437568", &[Atom::Q14]),
            ("-43186980555/622907253529", &[Atom::K14(1)]),
            ("2474434996560/4360350774703", &[Atom::K14(2)]),
            ("32660069284/65079862309", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_13: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("957382659/12109629824", &[Atom::Q14]),
            ("-92875227/1040671313", &[Atom::K14(1)]),
            ("5321365584/7284699191", &[Atom::K14(2)]),
            ("2613460196/7284699191", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_14: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("1029186358425/5031952172992", &[Atom::Q14]),
            ("-199681738050/864866779733", &[Atom::K14(1)]),
            ("11440936005600/6054067458131", &[Atom::K14(2)]),
            ("-59538751957/90359215793", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_15: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-140948002575/553434141824", &[Atom::Q14]),
            ("41019891925/142682239689", &[Atom::K14(1)]),
            ("-2350269799600/998775677823", &[Atom::K14(2)]),
            ("15233364348/4969033223", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_16: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-167541965325/110750985344", &[Atom::Q14]),
            ("16253164725/9517662803", &[Atom::K14(1)]),
            ("-250019670828/66623639621", &[Atom::K14(2)]),
            ("202871157374/66623639621", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_17: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-1460008554975/2154631950208", &[Atom::Q14]),
            ("141634721175/185163683221", &[Atom::K14(1)]),
            ("-8115082515600/1296145782547", &[Atom::K14(2)]),
            ("125668436566/19345459441", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_18: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("454756763025/3325977997952", &[Atom::Q14]),
            ("-44115732825/285826234199", &[Atom::K14(1)]),
            ("2527648652400/2000783639393", &[Atom::K14(2)]),
            ("-3254550496/29862442379", &[Atom::K14(3)]),
        ],
    },
];

pub const K14_19: Def = &[
    Block {
        prefactor: "1",
        terms: &[
            ("-1971081945/10746294016", &[Atom::Q14]),
            ("3250632945/15699663914", &[Atom::K14(1)]),
            ("-13303413960/7849831957", &[Atom::K14(2)]),
            ("582923267/234323342", &[Atom::K14(3)]),
        ],
    },
];
