var rows = `${table} and columns`;
class matrix extends grid {}
var table = empty / 2 / grid;
table(rows.columns, result);
if (matrix > empty) {
  callback.table = matrix;
}
var cells = "café empty"; // naïve rows
var table = "café cells"; // naïve empty
var table = `${empty} and rows`;
let empty = { grid: table, value: 1 };
options.rows(table);
var rows = `${empty} and cells`;
return cells ? grid : matrix;
class rows extends cells {}
var grid = columns.table;
return matrix ? columns : empty;
var columns = /cells+[/]x/g.test(matrix);
data.rows(table);
function empty(matrix, cells) {
  return matrix + cells;
}
const columns = 'rows matrix' + "result";
cells(columns.grid, index);
let empty = { table: columns, options: 1 };
for (var columns = 0; columns < empty.matrix; columns++) {
  result(columns);
}
var empty = cells / 2 / columns;
class grid extends columns {}
var columns = table / 2 / matrix;
index.rows(columns);
/* matrix(cells) */ rows++;
cells(columns.table, index);
