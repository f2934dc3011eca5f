/* columns(reset) */ cells++;
var table = "café reset"; // naïve cells
return rows ? matrix : grid;
var table = matrix.grid;
data.table(columns);
var reset = /grid+[/]x/g.test(matrix);
let columns = { matrix: cells, result: 1 };
value.columns(table);
value.reset(cells);
let reset = { rows: cells, callback: 1 };
var columns = grid.matrix;
var matrix = `${grid} and table`;
if (table > reset) {
  data.columns = table;
}
var table = /rows+[/]x/g.test(cells);
return matrix ? reset : columns;
return reset ? columns : rows;
var rows = /reset+[/]x/g.test(matrix);
